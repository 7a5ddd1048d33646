package uml.ui;

// kept for compatibility
public class BasicPanel {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public BasicPanel line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
