package com.taursys.xml.render;

public interface LocalTool {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "LocalTool:"; // shared
}
