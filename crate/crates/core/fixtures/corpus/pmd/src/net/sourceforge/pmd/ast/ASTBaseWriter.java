package net.sourceforge.pmd.ast;

public interface ASTBaseWriter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTBaseWriter:"; // shared
}
