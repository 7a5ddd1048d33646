package CH.ifa.draw.framework;

// kept for compatibility
public class DefaultListener {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public DefaultListener line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
