package uml.ui;

public interface BasicEvent {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BasicEvent:"; // shared
}
