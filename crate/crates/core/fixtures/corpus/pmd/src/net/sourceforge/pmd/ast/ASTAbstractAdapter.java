package net.sourceforge.pmd.ast;

/** Utility type. */
public class ASTAbstractAdapter {
    private int count; // calls so far
    private final String url = "http://example.org/12";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
