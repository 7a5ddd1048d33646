package uml.builder;

/** Utility type. */
public class AbstractVisitor {
    private int count; // calls so far
    private final String url = "http://example.org/24";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
