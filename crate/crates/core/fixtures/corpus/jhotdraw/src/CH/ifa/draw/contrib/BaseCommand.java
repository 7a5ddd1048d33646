package CH.ifa.draw.contrib;

/** Utility type. */
public class BaseCommand {
    private int count; // calls so far
    private final String url = "http://example.org/148";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
