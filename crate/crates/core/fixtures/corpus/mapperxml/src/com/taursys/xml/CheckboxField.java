package com.taursys.xml;

// CheckboxField: a terminal node
public class CheckboxField extends Component {
    private static final String LABEL = "// leaf";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
