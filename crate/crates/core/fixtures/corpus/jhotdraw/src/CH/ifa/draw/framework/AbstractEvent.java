package CH.ifa.draw.framework;

// kept for compatibility
public class AbstractEvent {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public AbstractEvent line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
