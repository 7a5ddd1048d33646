package com.taursys.model;

public interface LocalEvent {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "LocalEvent:"; // shared
}
