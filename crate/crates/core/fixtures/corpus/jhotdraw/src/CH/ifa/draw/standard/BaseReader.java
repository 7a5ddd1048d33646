package CH.ifa.draw.standard;

/** Utility type. */
public class BaseReader {
    private int count; // calls so far
    private final String url = "http://example.org/136";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
