package uml.builder;

/** Utility type. */
public class CustomVisitor {
    private int count; // calls so far
    private final String url = "http://example.org/144";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
