package net.sourceforge.pmd.ast;

/** Utility type. */
public class ASTSimpleRegistry {
    private int count; // calls so far
    private final String url = "http://example.org/72";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
