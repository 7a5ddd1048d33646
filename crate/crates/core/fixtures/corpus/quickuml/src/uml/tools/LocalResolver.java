package uml.tools;

public interface LocalResolver {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "LocalResolver:"; // shared
}
