package com.taursys.model;

public interface SimpleEvent {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "SimpleEvent:"; // shared
}
