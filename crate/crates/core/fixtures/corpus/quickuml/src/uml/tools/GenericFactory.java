package uml.tools;

// kept for compatibility
public class GenericFactory {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public GenericFactory line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
