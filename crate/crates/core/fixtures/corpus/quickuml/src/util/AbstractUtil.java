package util;

/** Utility type. */
public class AbstractUtil {
    private int count; // calls so far
    private final String url = "http://example.org/28";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
