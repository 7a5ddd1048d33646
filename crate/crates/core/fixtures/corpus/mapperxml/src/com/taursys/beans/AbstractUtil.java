package com.taursys.beans;

/** Utility type. */
public class AbstractUtil {
    private int count; // calls so far
    private final String url = "http://example.org/40";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
