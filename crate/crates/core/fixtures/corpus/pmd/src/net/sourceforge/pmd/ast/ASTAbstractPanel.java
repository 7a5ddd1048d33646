package net.sourceforge.pmd.ast;

public interface ASTAbstractPanel {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTAbstractPanel:"; // shared
}
