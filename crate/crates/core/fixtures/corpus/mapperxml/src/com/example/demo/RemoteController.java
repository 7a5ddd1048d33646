package com.example.demo;

/** Utility type. */
public class RemoteController {
    private int count; // calls so far
    private final String url = "http://example.org/236";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
