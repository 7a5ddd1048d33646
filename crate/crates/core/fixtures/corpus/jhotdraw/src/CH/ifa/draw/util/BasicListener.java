package CH.ifa.draw.util;

// kept for compatibility
public class BasicListener {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public BasicListener line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
