package com.taursys.util;

/** Utility type. */
public class BasicVisitor {
    private int count; // calls so far
    private final String url = "http://example.org/108";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
