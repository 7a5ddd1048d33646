package junit.runner;

public interface DefaultWriter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultWriter:"; // shared
}
