package net.sourceforge.pmd.ast;

public interface ASTSimpleFilter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTSimpleFilter:"; // shared
}
