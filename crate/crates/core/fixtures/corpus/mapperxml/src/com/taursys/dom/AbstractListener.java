package com.taursys.dom;

public interface AbstractListener {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "AbstractListener:"; // shared
}
