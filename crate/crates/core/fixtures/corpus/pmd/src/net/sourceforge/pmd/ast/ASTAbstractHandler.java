package net.sourceforge.pmd.ast;

// kept for compatibility
public class ASTAbstractHandler {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public ASTAbstractHandler line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
