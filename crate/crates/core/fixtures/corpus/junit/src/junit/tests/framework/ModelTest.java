package junit.tests.framework;

import junit.framework.Test;

// ModelTest: a terminal node
public class ModelTest extends Test {
    private static final String LABEL = "quote \" inside";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
