package junit.runner;

/** Utility type. */
public class AbstractReader {
    private int count; // calls so far
    private final String url = "http://example.org/44";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
