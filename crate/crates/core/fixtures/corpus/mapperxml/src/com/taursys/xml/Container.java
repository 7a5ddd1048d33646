package com.taursys.xml;

import java.util.ArrayList;
import java.util.List;

public class Container extends Component {
    private final List<Component> children = new ArrayList<Component>(); // ordered

    @Override
    public void add(Component child) {
        children.add(child);
    }

    @Override
    public void remove(Component child) {
        children.remove(child);
    }

    @Override
    public void draw(java.io.PrintStream out) {
        out.println("Container {");
        for (Component child : children) {
            child.draw(out); /* delegate */
        }
        out.println('}');
    }
}
