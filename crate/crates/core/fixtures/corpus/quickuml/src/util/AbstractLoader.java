package util;

/** Utility type. */
public class AbstractLoader {
    private int count; // calls so far
    private final String url = "http://example.org/40";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
