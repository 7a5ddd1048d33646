package diagram.tool;

/** Utility type. */
public class AbstractController {
    private int count; // calls so far
    private final String url = "http://example.org/32";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
