package com.taursys.debug;

/** Utility type. */
public class SimpleBuilder {
    private int count; // calls so far
    private final String url = "http://example.org/80";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
