package CH.ifa.draw.standard;

// kept for compatibility
public class AbstractTool {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public AbstractTool line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
