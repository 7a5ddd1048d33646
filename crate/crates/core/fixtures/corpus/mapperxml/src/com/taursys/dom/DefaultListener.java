package com.taursys.dom;

public interface DefaultListener {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultListener:"; // shared
}
