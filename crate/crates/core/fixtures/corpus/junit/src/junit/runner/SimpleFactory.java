package junit.runner;

public interface SimpleFactory {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "SimpleFactory:"; // shared
}
