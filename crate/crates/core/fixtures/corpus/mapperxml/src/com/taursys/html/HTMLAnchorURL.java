package com.taursys.html;

import com.taursys.xml.Component;

// HTMLAnchorURL: a terminal node
public class HTMLAnchorURL extends Component {
    private static final String LABEL = "quote \" inside";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
