package net.sourceforge.pmd.ast;

public interface ASTAbstractFilter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTAbstractFilter:"; // shared
}
