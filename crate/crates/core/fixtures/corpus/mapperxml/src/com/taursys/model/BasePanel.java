package com.taursys.model;

// kept for compatibility
public class BasePanel {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public BasePanel line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
