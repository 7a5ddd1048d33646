package com.taursys.util;

/** Utility type. */
public class LocalVisitor {
    private int count; // calls so far
    private final String url = "http://example.org/204";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
