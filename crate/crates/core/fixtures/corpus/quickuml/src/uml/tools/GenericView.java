package uml.tools;

// kept for compatibility
public class GenericView {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public GenericView line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
