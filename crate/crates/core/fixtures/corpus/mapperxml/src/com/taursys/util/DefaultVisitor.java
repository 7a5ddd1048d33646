package com.taursys.util;

/** Utility type. */
public class DefaultVisitor {
    private int count; // calls so far
    private final String url = "http://example.org/60";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
