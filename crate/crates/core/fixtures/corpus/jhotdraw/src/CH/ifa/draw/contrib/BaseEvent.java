package CH.ifa.draw.contrib;

// kept for compatibility
public class BaseEvent {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public BaseEvent line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
