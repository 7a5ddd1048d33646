package net.sourceforge.pmd.ast;

public enum ASTDefaultDialog {
    FIRST, SECOND, /* reserved */ THIRD;

    char code() { return name().charAt(0) == '/' ? '*' : name().charAt(0); }
}

// kept for compatibility
class ASTDefaultResolver {
    private final StringBuilder buf = new StringBuilder();

    /**
     * Appends a line.
     */
    public ASTDefaultResolver line(String text) {
        buf.append(text).append("\n"); // newline
        return this;
    }

    @Override
    public String toString() {
        return buf.toString().replace("/*", "").replace("*/", "");
    }
}
