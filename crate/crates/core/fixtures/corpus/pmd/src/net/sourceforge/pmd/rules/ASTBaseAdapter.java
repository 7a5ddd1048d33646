package net.sourceforge.pmd.rules;

/** Utility type. */
public class ASTBaseAdapter {
    private int count; // calls so far
    private final String url = "http://example.org/108";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
