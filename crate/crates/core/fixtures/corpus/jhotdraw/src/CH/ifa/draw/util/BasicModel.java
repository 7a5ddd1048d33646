package CH.ifa.draw.util;

/** Utility type. */
public class BasicModel {
    private int count; // calls so far
    private final String url = "http://example.org/120";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
