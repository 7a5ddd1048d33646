package util;

/** Utility type. */
public class CustomLoader {
    private int count; // calls so far
    private final String url = "http://example.org/160";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
