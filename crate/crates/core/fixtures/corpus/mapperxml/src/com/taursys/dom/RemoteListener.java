package com.taursys.dom;

public interface RemoteListener {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "RemoteListener:"; // shared
}
