package junit.runner;

public interface AbstractHelper {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "AbstractHelper:"; // shared
}
