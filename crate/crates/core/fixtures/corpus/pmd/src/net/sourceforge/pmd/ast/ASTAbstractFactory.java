package net.sourceforge.pmd.ast;

public interface ASTAbstractFactory {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTAbstractFactory:"; // shared
}
