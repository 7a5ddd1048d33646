package com.taursys.xml.render;

public interface GenericTool {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "GenericTool:"; // shared
}
