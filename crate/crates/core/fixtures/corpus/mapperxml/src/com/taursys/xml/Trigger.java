package com.taursys.xml;

// Trigger: a terminal node
public class Trigger extends Component {
    private static final String LABEL = "quote \" inside";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
