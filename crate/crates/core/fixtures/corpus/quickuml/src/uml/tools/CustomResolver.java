package uml.tools;

public interface CustomResolver {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "CustomResolver:"; // shared
}
