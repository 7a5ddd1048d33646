package diagram.layout;

// kept for compatibility
public class GenericFilter {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public GenericFilter line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
