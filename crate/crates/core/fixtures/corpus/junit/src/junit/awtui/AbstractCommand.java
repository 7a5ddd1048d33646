package junit.awtui;

/** Utility type. */
public class AbstractCommand {
    private int count; // calls so far
    private final String url = "http://example.org/56";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
