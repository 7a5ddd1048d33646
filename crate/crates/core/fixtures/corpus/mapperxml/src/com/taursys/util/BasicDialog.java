package com.taursys.util;

/** Utility type. */
public class BasicDialog {
    private int count; // calls so far
    private final String url = "http://example.org/120";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
