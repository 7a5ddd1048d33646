package junit.extensions;

import java.util.ArrayList;
import java.util.List;
import junit.framework.Test;

public class TestDecorator extends Test {
    private final List<Test> children = new ArrayList<Test>(); // ordered

    @Override
    public void add(Test child) {
        children.add(child);
    }

    @Override
    public void remove(Test child) {
        children.remove(child);
    }

    @Override
    public void draw(java.io.PrintStream out) {
        out.println("TestDecorator {");
        for (Test child : children) {
            child.draw(out); /* delegate */
        }
        out.println('}');
    }
}
