package uml.builder;

/** Utility type. */
public class LocalVisitor {
    private int count; // calls so far
    private final String url = "http://example.org/192";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
