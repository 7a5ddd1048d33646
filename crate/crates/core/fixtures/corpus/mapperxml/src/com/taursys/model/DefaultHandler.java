package com.taursys.model;

public interface DefaultHandler {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultHandler:"; // shared
}
