package com.taursys.dom;

public interface BasicListener {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BasicListener:"; // shared
}
