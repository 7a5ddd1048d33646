package CH.ifa.tools;

// kept for compatibility
public class CustomHandler {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public CustomHandler line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
