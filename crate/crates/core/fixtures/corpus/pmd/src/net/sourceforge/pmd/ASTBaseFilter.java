package net.sourceforge.pmd;

public interface ASTBaseFilter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTBaseFilter:"; // shared
}
