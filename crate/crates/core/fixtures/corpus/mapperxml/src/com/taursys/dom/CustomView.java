package com.taursys.dom;

// kept for compatibility
public class CustomView {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public CustomView line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
