package net.sourceforge.pmd.ast;

public interface ASTBasicHelper {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTBasicHelper:"; // shared
}
