package com.taursys.dom;

public interface AbstractResolver {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "AbstractResolver:"; // shared
}
