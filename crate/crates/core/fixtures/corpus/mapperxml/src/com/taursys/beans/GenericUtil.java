package com.taursys.beans;

/** Utility type. */
public class GenericUtil {
    private int count; // calls so far
    private final String url = "http://example.org/184";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
