package uml.tools;

public interface BasicListener {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BasicListener:"; // shared
}
