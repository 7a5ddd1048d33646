package com.taursys.dom;

// kept for compatibility
public class LocalFactory {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public LocalFactory line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
