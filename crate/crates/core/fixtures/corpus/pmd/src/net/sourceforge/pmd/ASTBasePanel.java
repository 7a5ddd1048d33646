package net.sourceforge.pmd;

public interface ASTBasePanel {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTBasePanel:"; // shared
}
