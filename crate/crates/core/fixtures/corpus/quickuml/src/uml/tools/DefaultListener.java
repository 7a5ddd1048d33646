package uml.tools;

public interface DefaultListener {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultListener:"; // shared
}
