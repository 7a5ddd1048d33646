package CH.ifa.draw.contrib;

/** Utility type. */
public class AbstractModel {
    private int count; // calls so far
    private final String url = "http://example.org/48";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
