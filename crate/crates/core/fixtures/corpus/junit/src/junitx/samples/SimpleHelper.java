package junitx.samples;

public interface SimpleHelper {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "SimpleHelper:"; // shared
}
