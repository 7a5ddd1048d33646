package com.taursys.xml;

// ElementText: a terminal node
public class ElementText extends Component {
    private static final String LABEL = "quote \" inside";
    private final char mark = '"';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
