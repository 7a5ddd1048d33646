package com.taursys.dom;

public interface LocalListener {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "LocalListener:"; // shared
}
