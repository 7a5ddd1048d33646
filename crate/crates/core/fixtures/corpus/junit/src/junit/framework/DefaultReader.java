package junit.framework;

/** Utility type. */
public class DefaultReader {
    private int count; // calls so far
    private final String url = "http://example.org/68";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
