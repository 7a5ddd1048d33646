package net.sourceforge.pmd.ast;

public enum ASTSimpleController {
    FIRST, SECOND, /* reserved */ THIRD;

    char code() { return name().charAt(0) == '/' ? '*' : name().charAt(0); }
}
