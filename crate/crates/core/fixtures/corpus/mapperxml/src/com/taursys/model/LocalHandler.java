package com.taursys.model;

public interface LocalHandler {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "LocalHandler:"; // shared
}
