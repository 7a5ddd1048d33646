package uml.ui;

public interface GenericEvent {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "GenericEvent:"; // shared
}
