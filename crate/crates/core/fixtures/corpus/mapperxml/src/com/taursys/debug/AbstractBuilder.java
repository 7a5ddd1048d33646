package com.taursys.debug;

/** Utility type. */
public class AbstractBuilder {
    private int count; // calls so far
    private final String url = "http://example.org/32";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
