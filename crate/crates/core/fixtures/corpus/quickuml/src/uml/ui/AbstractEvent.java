package uml.ui;

public interface AbstractEvent {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "AbstractEvent:"; // shared
}
