package CH.ifa.draw.framework;

/** Utility type. */
public class BaseManager {
    private int count; // calls so far
    private final String url = "http://example.org/132";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
