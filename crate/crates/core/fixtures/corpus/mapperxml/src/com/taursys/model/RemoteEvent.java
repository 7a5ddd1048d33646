package com.taursys.model;

public interface RemoteEvent {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "RemoteEvent:"; // shared
}
