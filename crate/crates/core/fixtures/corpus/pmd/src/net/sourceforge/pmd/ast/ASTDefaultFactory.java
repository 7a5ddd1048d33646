package net.sourceforge.pmd.ast;

public interface ASTDefaultFactory {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTDefaultFactory:"; // shared
}
