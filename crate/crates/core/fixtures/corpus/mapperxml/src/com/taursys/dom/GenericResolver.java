package com.taursys.dom;

public interface GenericResolver {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "GenericResolver:"; // shared
}
