package com.taursys.debug;

/** Utility type. */
public class LocalController {
    private int count; // calls so far
    private final String url = "http://example.org/212";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
