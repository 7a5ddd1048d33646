package uml.tools;

public interface BaseListener {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BaseListener:"; // shared
}
