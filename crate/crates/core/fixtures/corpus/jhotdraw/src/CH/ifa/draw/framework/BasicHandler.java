package CH.ifa.draw.framework;

// kept for compatibility
public class BasicHandler {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public BasicHandler line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
