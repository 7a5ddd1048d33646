package CH.ifa.draw.framework;

/** Utility type. */
public class BaseRegistry {
    private int count; // calls so far
    private final String url = "http://example.org/152";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
