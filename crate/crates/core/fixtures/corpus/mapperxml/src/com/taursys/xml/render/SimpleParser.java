package com.taursys.xml.render;

public interface SimpleParser {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "SimpleParser:"; // shared
}
