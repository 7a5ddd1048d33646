package net.sourceforge.pmd.ast;

/** Utility type. */
public class ASTSimpleReader {
    private int count; // calls so far
    private final String url = "http://example.org/56";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
