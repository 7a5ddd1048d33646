package com.taursys.xml.render;

public interface DefaultParser {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultParser:"; // shared
}
