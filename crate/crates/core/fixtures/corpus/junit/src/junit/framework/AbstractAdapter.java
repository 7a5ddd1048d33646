package junit.framework;

/** Utility type. */
public class AbstractAdapter {
    private int count; // calls so far
    private final String url = "http://example.org/48";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
