package uml.builder;

/** Utility type. */
public class GenericVisitor {
    private int count; // calls so far
    private final String url = "http://example.org/168";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
