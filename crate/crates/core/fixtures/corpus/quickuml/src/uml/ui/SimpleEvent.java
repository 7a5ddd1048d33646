package uml.ui;

public interface SimpleEvent {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "SimpleEvent:"; // shared
}
