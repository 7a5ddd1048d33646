package com.taursys.model;

public interface RemoteHandler {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "RemoteHandler:"; // shared
}
