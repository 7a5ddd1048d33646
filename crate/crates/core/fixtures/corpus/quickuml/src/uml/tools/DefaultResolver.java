package uml.tools;

public interface DefaultResolver {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultResolver:"; // shared
}
