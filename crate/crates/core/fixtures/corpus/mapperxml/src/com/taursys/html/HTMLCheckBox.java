package com.taursys.html;

import com.taursys.xml.Component;

// HTMLCheckBox: a terminal node
public class HTMLCheckBox extends Component {
    private static final String LABEL = "// leaf";
    private final char mark = '"';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
