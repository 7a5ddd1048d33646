package uml.ui;

public interface CustomEvent {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "CustomEvent:"; // shared
}
