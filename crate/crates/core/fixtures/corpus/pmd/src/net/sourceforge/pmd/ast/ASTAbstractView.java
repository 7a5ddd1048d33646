package net.sourceforge.pmd.ast;

public interface ASTAbstractView {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTAbstractView:"; // shared
}
