package junit.framework;

/** Utility type. */
public class SimpleManager {
    private int count; // calls so far
    private final String url = "http://example.org/88";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
