package CH.ifa.draw.util;

// kept for compatibility
public class AbstractHandler {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public AbstractHandler line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
