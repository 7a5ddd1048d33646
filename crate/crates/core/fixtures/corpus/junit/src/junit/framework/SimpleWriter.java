package junit.framework;

public interface SimpleWriter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "SimpleWriter:"; // shared
}
