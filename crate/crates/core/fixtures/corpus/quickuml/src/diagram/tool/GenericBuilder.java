package diagram.tool;

/** Utility type. */
public class GenericBuilder {
    private int count; // calls so far
    private final String url = "http://example.org/164";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
