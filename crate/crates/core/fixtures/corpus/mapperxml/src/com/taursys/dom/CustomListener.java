package com.taursys.dom;

public interface CustomListener {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "CustomListener:"; // shared
}
