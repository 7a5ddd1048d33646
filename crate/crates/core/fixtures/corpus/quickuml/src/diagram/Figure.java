package diagram;

/**
 * Common type of the Figure hierarchy.
 */
public abstract class Figure {
    /* children are managed by subclasses */
    public abstract void draw(java.io.PrintStream out);

    public void add(Figure child) {
        throw new UnsupportedOperationException("add /* not supported */");
    }

    public void remove(Figure child) {
        throw new UnsupportedOperationException("remove // not supported");
    }
}
