package net.sourceforge.pmd.ast;

public interface ASTSimpleView {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTSimpleView:"; // shared
}
