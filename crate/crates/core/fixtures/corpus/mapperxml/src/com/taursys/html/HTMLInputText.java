package com.taursys.html;

import com.taursys.xml.Component;

// HTMLInputText: a terminal node
public class HTMLInputText extends Component {
    private static final String LABEL = "/* leaf */";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
