package com.taursys.html;

import com.taursys.xml.Component;

// HTMLComponentFactory: a terminal node
public class HTMLComponentFactory extends Component {
    private static final String LABEL = "/* leaf */";
    private final char mark = '"';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
