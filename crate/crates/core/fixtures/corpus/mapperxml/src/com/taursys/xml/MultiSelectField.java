package com.taursys.xml;

// MultiSelectField: a terminal node
public class MultiSelectField extends Component {
    private static final String LABEL = "/* leaf */";
    private final char mark = '"';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
