package net.sourceforge.pmd.ast;

public interface ASTBaseFactory {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTBaseFactory:"; // shared
}
