package uml.tools;

public interface LocalListener {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "LocalListener:"; // shared
}
