package junit.tests.framework;

import junit.framework.Test;

// LocalTest: a terminal node
public class LocalTest extends Test {
    private static final String LABEL = "quote \" inside";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
