package util;

/** Utility type. */
public class LocalUtil {
    private int count; // calls so far
    private final String url = "http://example.org/196";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
