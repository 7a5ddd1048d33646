package com.taursys.xml;

// SelectField: a terminal node
public class SelectField extends Component {
    private static final String LABEL = "quote \" inside";
    private final char mark = '"';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
