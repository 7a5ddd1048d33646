package com.taursys.xml.render;

// kept for compatibility
public class CustomHelper {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public CustomHelper line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
