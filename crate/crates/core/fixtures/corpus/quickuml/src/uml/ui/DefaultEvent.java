package uml.ui;

public interface DefaultEvent {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultEvent:"; // shared
}
