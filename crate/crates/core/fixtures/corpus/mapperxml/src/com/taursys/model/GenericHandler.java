package com.taursys.model;

public interface GenericHandler {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "GenericHandler:"; // shared
}
