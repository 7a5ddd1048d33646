package net.sourceforge.pmd.ast;

public interface ASTDefaultWriter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTDefaultWriter:"; // shared
}
