package uml.ui;

public interface SimpleHandler {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "SimpleHandler:"; // shared
}
