package junit.textui;

public interface DefaultFactory {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultFactory:"; // shared
}
