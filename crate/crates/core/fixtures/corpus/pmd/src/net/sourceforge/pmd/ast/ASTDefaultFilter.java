package net.sourceforge.pmd.ast;

public interface ASTDefaultFilter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTDefaultFilter:"; // shared
}
