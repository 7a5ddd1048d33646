package com.taursys.model;

public interface DefaultEvent {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultEvent:"; // shared
}
