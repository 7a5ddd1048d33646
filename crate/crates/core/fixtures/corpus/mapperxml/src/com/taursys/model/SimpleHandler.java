package com.taursys.model;

public interface SimpleHandler {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "SimpleHandler:"; // shared
}
