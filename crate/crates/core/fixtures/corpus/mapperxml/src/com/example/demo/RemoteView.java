package com.example.demo;

// kept for compatibility
public class RemoteView {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public RemoteView line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
