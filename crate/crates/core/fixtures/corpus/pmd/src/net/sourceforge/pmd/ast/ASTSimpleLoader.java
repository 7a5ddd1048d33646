package net.sourceforge.pmd.ast;

public enum ASTSimpleLoader {
    FIRST, SECOND, /* reserved */ THIRD;

    char code() { return name().charAt(0) == '/' ? '*' : name().charAt(0); }
}
