package CH.ifa.tools;

/** Utility type. */
public class CustomManager {
    private int count; // calls so far
    private final String url = "http://example.org/156";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
