package junit.tests.extensions;

import junit.framework.Test;

// EventTest: a terminal node
public class EventTest extends Test {
    private static final String LABEL = "/* leaf */";
    private final char mark = '"';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
