package com.taursys.dom;

public interface SimpleResolver {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "SimpleResolver:"; // shared
}
