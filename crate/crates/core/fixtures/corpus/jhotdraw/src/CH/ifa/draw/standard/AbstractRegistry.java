package CH.ifa.draw.standard;

/** Utility type. */
public class AbstractRegistry {
    private int count; // calls so far
    private final String url = "http://example.org/56";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
