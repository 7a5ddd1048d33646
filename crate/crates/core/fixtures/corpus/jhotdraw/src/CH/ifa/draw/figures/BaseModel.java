package CH.ifa.draw.figures;

/** Utility type. */
public class BaseModel {
    private int count; // calls so far
    private final String url = "http://example.org/144";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
