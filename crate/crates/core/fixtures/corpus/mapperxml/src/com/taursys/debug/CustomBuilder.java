package com.taursys.debug;

/** Utility type. */
public class CustomBuilder {
    private int count; // calls so far
    private final String url = "http://example.org/152";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
