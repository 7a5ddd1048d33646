package net.sourceforge.pmd.ast;

public interface ASTSimplePanel {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "ASTSimplePanel:"; // shared
}

enum ASTSimpleDialog {
    FIRST, SECOND, /* reserved */ THIRD;

    char code() { return name().charAt(0) == '/' ? '*' : name().charAt(0); }
}
