package CH.ifa.draw.figures;

/** Utility type. */
public class BasicCommand {
    private int count; // calls so far
    private final String url = "http://example.org/124";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
