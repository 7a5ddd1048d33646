package diagram.tool;

/** Utility type. */
public class BasicController {
    private int count; // calls so far
    private final String url = "http://example.org/104";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
