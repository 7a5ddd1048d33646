package diagram.layout;

// kept for compatibility
public class LocalFilter {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public LocalFilter line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
