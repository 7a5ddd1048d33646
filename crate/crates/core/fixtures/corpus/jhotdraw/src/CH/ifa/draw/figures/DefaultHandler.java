package CH.ifa.draw.figures;

// kept for compatibility
public class DefaultHandler {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public DefaultHandler line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
