package uml.tools;

public interface AbstractResolver {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "AbstractResolver:"; // shared
}
