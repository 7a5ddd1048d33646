package util;

/** Utility type. */
public class BasicLoader {
    private int count; // calls so far
    private final String url = "http://example.org/112";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
