package net.sourceforge.pmd;

public interface ASTBaseHelper {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTBaseHelper:"; // shared
}
