package com.taursys.xml.render;

// kept for compatibility
public class BasicFilter {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public BasicFilter line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
