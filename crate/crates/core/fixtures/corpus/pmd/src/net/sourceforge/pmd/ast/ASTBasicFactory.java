package net.sourceforge.pmd.ast;

public interface ASTBasicFactory {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTBasicFactory:"; // shared
}
