package diagram.tool;

/** Utility type. */
public class LocalController {
    private int count; // calls so far
    private final String url = "http://example.org/200";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
