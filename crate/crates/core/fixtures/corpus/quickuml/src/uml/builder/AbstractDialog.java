package uml.builder;

/** Utility type. */
public class AbstractDialog {
    private int count; // calls so far
    private final String url = "http://example.org/36";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
