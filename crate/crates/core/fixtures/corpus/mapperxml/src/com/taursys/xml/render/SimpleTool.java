package com.taursys.xml.render;

public interface SimpleTool {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "SimpleTool:"; // shared
}
