package net.sourceforge.pmd.ast;

// kept for compatibility
public class ASTAbstractResolver {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public ASTAbstractResolver line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}

/** Utility type. */
class ASTAbstractRegistry {
    private int count; // calls so far
    private final String url = "http://example.org/24";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
