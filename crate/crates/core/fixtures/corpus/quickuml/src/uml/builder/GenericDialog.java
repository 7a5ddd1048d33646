package uml.builder;

/** Utility type. */
public class GenericDialog {
    private int count; // calls so far
    private final String url = "http://example.org/180";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
