package CH.ifa.draw.application;

import CH.ifa.draw.framework.Figure;

/*
 * Builds and renders a tree.
 */
public class DrawApplication {
    private Figure root;

    public void setRoot(Figure root) { this.root = root; }

    public void render() {
        if (root != null) {
            root.draw(System.out); // whole tree
        }
    }
}
