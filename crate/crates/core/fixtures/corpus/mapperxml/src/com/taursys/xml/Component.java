package com.taursys.xml;

/**
 * Common type of the Component hierarchy.
 */
public abstract class Component {
    /* children are managed by subclasses */
    public abstract void draw(java.io.PrintStream out);

    public void add(Component child) {
        throw new UnsupportedOperationException("add /* not supported */");
    }

    public void remove(Component child) {
        throw new UnsupportedOperationException("remove // not supported");
    }
}
