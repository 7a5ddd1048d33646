package com.taursys.beans;

/** Utility type. */
public class CustomUtil {
    private int count; // calls so far
    private final String url = "http://example.org/160";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
