package junit.extensions;

import junit.framework.Test;

// ExceptionTestCase: a terminal node
public class ExceptionTestCase extends Test {
    private static final String LABEL = "// leaf";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
