package com.taursys.xml.render;

public interface BasicTool {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BasicTool:"; // shared
}
