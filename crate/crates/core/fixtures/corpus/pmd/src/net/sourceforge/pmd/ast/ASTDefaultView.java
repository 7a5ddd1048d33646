package net.sourceforge.pmd.ast;

public interface ASTDefaultView {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTDefaultView:"; // shared
}
