package uml.tools;

// kept for compatibility
public class RemoteFactory {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public RemoteFactory line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
