package junit.tests.framework;

import junit.framework.Test;

// FactoryTest: a terminal node
public class FactoryTest extends Test {
    private static final String LABEL = "// leaf";
    private final char mark = '"';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
