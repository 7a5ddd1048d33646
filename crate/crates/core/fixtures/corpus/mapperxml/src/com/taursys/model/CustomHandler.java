package com.taursys.model;

public interface CustomHandler {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "CustomHandler:"; // shared
}
