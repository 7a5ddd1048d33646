package CH.ifa.draw.util;

/** Utility type. */
public class SimpleCommand {
    private int count; // calls so far
    private final String url = "http://example.org/100";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
