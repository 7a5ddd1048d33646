package net.sourceforge.pmd.ast;

public interface ASTBasicFilter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTBasicFilter:"; // shared
}
