package net.sourceforge.pmd.ast;

// kept for compatibility
public class ASTDefaultHandler {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public ASTDefaultHandler line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
