package util;

/** Utility type. */
public class GenericLoader {
    private int count; // calls so far
    private final String url = "http://example.org/184";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
