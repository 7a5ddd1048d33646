package CH.ifa.draw.standard;

// kept for compatibility
public class BasicParser {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public BasicParser line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
