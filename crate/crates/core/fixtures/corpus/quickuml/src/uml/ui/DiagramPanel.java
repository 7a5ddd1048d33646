package uml.ui;

import diagram.Figure;

/*
 * Builds and renders a tree.
 */
public class DiagramPanel {
    private Figure root;

    public void setRoot(Figure root) { this.root = root; }

    public void render() {
        if (root != null) {
            root.draw(System.out); // whole tree
        }
    }
}
