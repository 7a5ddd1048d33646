package com.taursys.html;

import com.taursys.xml.Component;

// HTMLDocument: a terminal node
public class HTMLDocument extends Component {
    private static final String LABEL = "quote \" inside";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
