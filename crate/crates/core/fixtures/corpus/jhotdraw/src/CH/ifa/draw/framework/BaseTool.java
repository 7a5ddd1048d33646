package CH.ifa.draw.framework;

// kept for compatibility
public class BaseTool {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public BaseTool line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
