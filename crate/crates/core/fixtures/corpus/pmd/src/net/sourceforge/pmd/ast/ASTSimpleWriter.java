package net.sourceforge.pmd.ast;

public interface ASTSimpleWriter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTSimpleWriter:"; // shared
}
