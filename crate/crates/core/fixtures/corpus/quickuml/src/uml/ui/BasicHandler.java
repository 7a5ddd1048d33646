package uml.ui;

public interface BasicHandler {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BasicHandler:"; // shared
}
