package junit.runner;

/** Utility type. */
public class DefaultRegistry {
    private int count; // calls so far
    private final String url = "http://example.org/84";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
