package com.taursys.xml.render;

public interface RemoteParser {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "RemoteParser:"; // shared
}
