package junit.framework;

public interface DefaultHelper {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultHelper:"; // shared
}
