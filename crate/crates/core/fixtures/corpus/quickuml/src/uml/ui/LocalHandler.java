package uml.ui;

public interface LocalHandler {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "LocalHandler:"; // shared
}
