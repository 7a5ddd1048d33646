package uml.ui;

public interface GenericHandler {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "GenericHandler:"; // shared
}
