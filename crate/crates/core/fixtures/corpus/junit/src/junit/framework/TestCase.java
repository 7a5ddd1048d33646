package junit.framework;

// TestCase: a terminal node
public class TestCase extends Test {
    private static final String LABEL = "// leaf";
    private final char mark = '"';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
