package junit.awtui;

/** Utility type. */
public class DefaultModel {
    private int count; // calls so far
    private final String url = "http://example.org/76";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
