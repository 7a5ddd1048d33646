package util;

/** Utility type. */
public class DefaultUtil {
    private int count; // calls so far
    private final String url = "http://example.org/52";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
