package com.taursys.model;

public interface AbstractEvent {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "AbstractEvent:"; // shared
}
