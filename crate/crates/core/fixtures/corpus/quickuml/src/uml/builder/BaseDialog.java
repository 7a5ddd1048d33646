package uml.builder;

/** Utility type. */
public class BaseDialog {
    private int count; // calls so far
    private final String url = "http://example.org/132";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
