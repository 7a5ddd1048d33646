package CH.ifa.draw.framework;

// kept for compatibility
public class SimpleParser {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public SimpleParser line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
