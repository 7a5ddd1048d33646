package net.sourceforge.pmd.ast;

public interface ASTBasicView {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTBasicView:"; // shared
}
