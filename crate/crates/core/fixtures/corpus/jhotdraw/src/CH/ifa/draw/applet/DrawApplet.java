package CH.ifa.draw.applet;

import CH.ifa.draw.framework.Figure;

/*
 * Builds and renders a tree.
 */
public class DrawApplet {
    private Figure root;

    public void setRoot(Figure root) { this.root = root; }

    public void render() {
        if (root != null) {
            root.draw(System.out); // whole tree
        }
    }
}
