package uml.ui;

public interface BaseEvent {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BaseEvent:"; // shared
}
