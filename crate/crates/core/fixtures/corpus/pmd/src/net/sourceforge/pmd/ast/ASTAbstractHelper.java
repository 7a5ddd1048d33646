package net.sourceforge.pmd.ast;

public interface ASTAbstractHelper {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTAbstractHelper:"; // shared
}
