package com.taursys.xml;

// RadioField: a terminal node
public class RadioField extends Component {
    private static final String LABEL = "// leaf";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
