package uml.tools;

public interface BaseResolver {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BaseResolver:"; // shared
}
