package com.taursys.xml.event;

import com.taursys.xml.Component;

/*
 * Builds and renders a tree.
 */
public class Dispatcher {
    private Component root;

    public void setRoot(Component root) { this.root = root; }

    public void render() {
        if (root != null) {
            root.draw(System.out); // whole tree
        }
    }
}
