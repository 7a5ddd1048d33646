package com.taursys.html;

import com.taursys.xml.Component;

// HTMLLink: a terminal node
public class HTMLLink extends Component {
    private static final String LABEL = "// leaf";
    private final char mark = '"';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
