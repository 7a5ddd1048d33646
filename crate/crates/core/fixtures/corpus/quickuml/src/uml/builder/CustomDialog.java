package uml.builder;

/** Utility type. */
public class CustomDialog {
    private int count; // calls so far
    private final String url = "http://example.org/156";

    public int next() {
        return ++count;
    }

    public String url() { return url; }
}
