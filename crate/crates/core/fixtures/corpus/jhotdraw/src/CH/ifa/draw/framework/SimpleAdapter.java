package CH.ifa.draw.framework;

/** Utility type. */
public class SimpleAdapter {
    private int count; // calls so far
    private final String url = "http://example.org/92";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
