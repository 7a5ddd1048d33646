package net.sourceforge.pmd.ast;

public interface ASTSimpleHelper {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTSimpleHelper:"; // shared
}
