package junit.framework;

import java.util.ArrayList;
import java.util.List;

public class TestSuite extends Test {
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
        out.println("TestSuite {");
        for (Test child : children) {
            child.draw(out); /* delegate */
        }
        out.println('}');
    }
}
