package CH.ifa.draw.figures;

/** Utility type. */
public class DefaultReader {
    private int count; // calls so far
    private final String url = "http://example.org/64";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
