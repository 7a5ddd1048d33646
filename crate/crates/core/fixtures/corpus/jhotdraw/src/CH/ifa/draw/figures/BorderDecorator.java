package CH.ifa.draw.figures;

import CH.ifa.draw.framework.Figure;

// BorderDecorator: a terminal node
public class BorderDecorator extends Figure {
    private static final String LABEL = "// leaf";
    private final char mark = '"';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
