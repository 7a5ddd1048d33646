package diagram.tool;

/** Utility type. */
public class SimpleBuilder {
    private int count; // calls so far
    private final String url = "http://example.org/68";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
