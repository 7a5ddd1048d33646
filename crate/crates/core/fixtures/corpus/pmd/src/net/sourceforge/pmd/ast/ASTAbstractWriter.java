package net.sourceforge.pmd.ast;

public interface ASTAbstractWriter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTAbstractWriter:"; // shared
}
