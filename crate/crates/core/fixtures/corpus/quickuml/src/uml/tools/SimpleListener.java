package uml.tools;

public interface SimpleListener {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "SimpleListener:"; // shared
}
