package com.example.demo;

public interface RemoteTool {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "RemoteTool:"; // shared
}
