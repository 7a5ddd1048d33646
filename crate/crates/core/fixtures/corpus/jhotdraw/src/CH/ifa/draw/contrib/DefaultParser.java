package CH.ifa.draw.contrib;

// kept for compatibility
public class DefaultParser {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public DefaultParser line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
