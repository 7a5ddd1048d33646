package util;

/** Utility type. */
public class GenericUtil {
    private int count; // calls so far
    private final String url = "http://example.org/172";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
