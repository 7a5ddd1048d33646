package uml.tools;

public interface GenericListener {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "GenericListener:"; // shared
}
