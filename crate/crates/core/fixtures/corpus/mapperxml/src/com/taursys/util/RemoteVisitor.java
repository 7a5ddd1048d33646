package com.taursys.util;

/** Utility type. */
public class RemoteVisitor {
    private int count; // calls so far
    private final String url = "http://example.org/228";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
