package CH.ifa.draw.figures;

/** Utility type. */
public class SimpleRegistry {
    private int count; // calls so far
    private final String url = "http://example.org/104";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
