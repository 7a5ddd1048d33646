package com.taursys.xml.render;

public interface AbstractTool {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "AbstractTool:"; // shared
}
