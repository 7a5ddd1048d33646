package net.sourceforge.pmd.rules;

public enum ASTBaseController {
    FIRST, SECOND, /* reserved */ THIRD;

    char code() { return name().charAt(0) == '/' ? '*' : name().charAt(0); }
}
