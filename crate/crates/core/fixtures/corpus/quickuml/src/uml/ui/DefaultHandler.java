package uml.ui;

public interface DefaultHandler {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultHandler:"; // shared
}
