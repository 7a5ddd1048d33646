package net.sourceforge.pmd.ast;

public interface ASTSimpleFactory {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTSimpleFactory:"; // shared
}
