package uml.ui;

public interface AbstractHandler {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "AbstractHandler:"; // shared
}
