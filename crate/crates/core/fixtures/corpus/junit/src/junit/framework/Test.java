package junit.framework;

/**
 * Common type of the Test hierarchy.
 */
public abstract class Test {
    /* children are managed by subclasses */
    public abstract void draw(java.io.PrintStream out);

    public void add(Test child) {
        throw new UnsupportedOperationException("add /* not supported */");
    }

    public void remove(Test child) {
        throw new UnsupportedOperationException("remove // not supported");
    }
}
