package junit.tests.extensions;

import junit.framework.Test;

// WriterTest: a terminal node
public class WriterTest extends Test {
    private static final String LABEL = "/* leaf */";
    private final char mark = '"';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
