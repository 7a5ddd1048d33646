package com.taursys.xml.render;

public interface CustomTool {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "CustomTool:"; // shared
}
