package com.taursys.util;

/** Utility type. */
public class GenericDialog {
    private int count; // calls so far
    private final String url = "http://example.org/192";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
