package net.sourceforge.pmd.ast;

import java.util.ArrayList;
import java.util.List;

public class SimpleNode extends Node {
    private final List<Node> children = new ArrayList<Node>(); // ordered

    @Override
    public void add(Node child) {
        children.add(child);
    }

    @Override
    public void remove(Node child) {
        children.remove(child);
    }

    @Override
    public void draw(java.io.PrintStream out) {
        out.println("SimpleNode {");
        for (Node child : children) {
            child.draw(out); /* delegate */
        }
        out.println('}');
    }
}
