package uml.builder;

/** Utility type. */
public class DefaultDialog {
    private int count; // calls so far
    private final String url = "http://example.org/60";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
