package net.sourceforge.pmd;

// kept for compatibility
public class ASTBaseResolver {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public ASTBaseResolver line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
