package diagram.tool;

/** Utility type. */
public class CustomBuilder {
    private int count; // calls so far
    private final String url = "http://example.org/140";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
