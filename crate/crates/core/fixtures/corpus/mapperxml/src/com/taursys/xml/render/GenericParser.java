package com.taursys.xml.render;

public interface GenericParser {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "GenericParser:"; // shared
}
