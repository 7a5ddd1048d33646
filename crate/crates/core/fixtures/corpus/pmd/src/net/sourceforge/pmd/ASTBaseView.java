package net.sourceforge.pmd;

public interface ASTBaseView {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTBaseView:"; // shared
}
