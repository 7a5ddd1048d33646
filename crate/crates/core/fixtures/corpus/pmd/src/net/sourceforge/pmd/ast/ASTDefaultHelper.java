package net.sourceforge.pmd.ast;

public interface ASTDefaultHelper {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTDefaultHelper:"; // shared
}
