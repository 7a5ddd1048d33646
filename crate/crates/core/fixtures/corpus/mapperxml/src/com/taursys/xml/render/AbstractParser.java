package com.taursys.xml.render;

public interface AbstractParser {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "AbstractParser:"; // shared
}
