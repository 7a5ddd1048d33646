package net.sourceforge.pmd.ast;

// ASTCompilationUnit: a terminal node
public class ASTCompilationUnit extends Node {
    private static final String LABEL = "quote \" inside";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
