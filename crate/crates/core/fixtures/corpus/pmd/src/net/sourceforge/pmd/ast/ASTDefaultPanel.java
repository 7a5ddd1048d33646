package net.sourceforge.pmd.ast;

public interface ASTDefaultPanel {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTDefaultPanel:"; // shared
}
