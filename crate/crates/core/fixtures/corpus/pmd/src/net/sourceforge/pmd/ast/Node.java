package net.sourceforge.pmd.ast;

/**
 * Common type of the Node hierarchy.
 */
public abstract class Node {
    /* children are managed by subclasses */
    public abstract void draw(java.io.PrintStream out);

    public void add(Node child) {
        throw new UnsupportedOperationException("add /* not supported */");
    }

    public void remove(Node child) {
        throw new UnsupportedOperationException("remove // not supported");
    }
}
