package CH.ifa.draw.contrib;

// kept for compatibility
public class AbstractListener {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public AbstractListener line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
