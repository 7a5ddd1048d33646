package net.sourceforge.pmd.ast;

// kept for compatibility
public class ASTAbstractListener {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public ASTAbstractListener line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
