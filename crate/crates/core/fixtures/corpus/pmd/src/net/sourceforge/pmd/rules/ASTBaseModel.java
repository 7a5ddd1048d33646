package net.sourceforge.pmd.rules;

/** Utility type. */
public class ASTBaseModel {
    private int count; // calls so far
    private final String url = "http://example.org/112";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
