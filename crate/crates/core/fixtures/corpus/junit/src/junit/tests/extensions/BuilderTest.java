package junit.tests.extensions;

import junit.framework.Test;

// BuilderTest: a terminal node
public class BuilderTest extends Test {
    private static final String LABEL = "/* leaf */";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
