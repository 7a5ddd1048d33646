package com.taursys.model;

public interface BaseHandler {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BaseHandler:"; // shared
}
