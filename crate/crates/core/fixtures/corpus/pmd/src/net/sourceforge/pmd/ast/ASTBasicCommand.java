package net.sourceforge.pmd.ast;

/** Utility type. */
public class ASTBasicCommand {
    private int count; // calls so far
    private final String url = "http://example.org/92";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}

interface ASTBasicPanel {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTBasicPanel:"; // shared
}
