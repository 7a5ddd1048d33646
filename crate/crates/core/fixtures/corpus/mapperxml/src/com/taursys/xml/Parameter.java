package com.taursys.xml;

// Parameter: a terminal node
public class Parameter extends Component {
    private static final String LABEL = "quote \" inside";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
