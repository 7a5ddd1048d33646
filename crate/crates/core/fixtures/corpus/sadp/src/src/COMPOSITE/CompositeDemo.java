package src.COMPOSITE;

/*
 * Builds and renders a tree.
 */
public class CompositeDemo {
    private FileSystemComponent root;

    public void setRoot(FileSystemComponent root) { this.root = root; }

    public void render() {
        if (root != null) {
            root.draw(System.out); // whole tree
        }
    }
}
