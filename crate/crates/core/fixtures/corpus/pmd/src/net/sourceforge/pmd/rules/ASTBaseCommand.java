package net.sourceforge.pmd.rules;

/** Utility type. */
public class ASTBaseCommand {
    private int count; // calls so far
    private final String url = "http://example.org/116";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
