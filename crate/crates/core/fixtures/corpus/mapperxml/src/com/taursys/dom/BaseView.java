package com.taursys.dom;

// kept for compatibility
public class BaseView {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public BaseView line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
