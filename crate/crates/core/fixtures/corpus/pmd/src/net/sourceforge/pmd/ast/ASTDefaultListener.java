package net.sourceforge.pmd.ast;

// kept for compatibility
public class ASTDefaultListener {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public ASTDefaultListener line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
