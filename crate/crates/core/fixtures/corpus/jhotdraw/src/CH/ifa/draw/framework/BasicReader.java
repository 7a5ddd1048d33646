package CH.ifa.draw.framework;

/** Utility type. */
public class BasicReader {
    private int count; // calls so far
    private final String url = "http://example.org/112";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
