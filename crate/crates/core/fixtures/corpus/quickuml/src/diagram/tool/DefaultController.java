package diagram.tool;

/** Utility type. */
public class DefaultController {
    private int count; // calls so far
    private final String url = "http://example.org/56";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
