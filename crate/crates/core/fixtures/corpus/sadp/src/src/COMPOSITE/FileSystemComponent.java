package src.COMPOSITE;

/**
 * Common type of the FileSystemComponent hierarchy.
 */
public abstract class FileSystemComponent {
    /* children are managed by subclasses */
    public abstract void draw(java.io.PrintStream out);

    public void add(FileSystemComponent child) {
        throw new UnsupportedOperationException("add /* not supported */");
    }

    public void remove(FileSystemComponent child) {
        throw new UnsupportedOperationException("remove // not supported");
    }
}
