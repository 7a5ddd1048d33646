package net.sourceforge.pmd.ast;

public interface ASTBasicWriter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTBasicWriter:"; // shared
}
