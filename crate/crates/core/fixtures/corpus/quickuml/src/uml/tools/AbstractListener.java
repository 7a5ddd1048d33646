package uml.tools;

public interface AbstractListener {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "AbstractListener:"; // shared
}
