package com.taursys.beans;

/** Utility type. */
public class BaseLoader {
    private int count; // calls so far
    private final String url = "http://example.org/148";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
