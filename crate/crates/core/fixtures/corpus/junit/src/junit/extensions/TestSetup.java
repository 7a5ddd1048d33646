package junit.extensions;

import junit.framework.Test;

// TestSetup: a terminal node
public class TestSetup extends Test {
    private static final String LABEL = "quote \" inside";
    private final char mark = '"';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
