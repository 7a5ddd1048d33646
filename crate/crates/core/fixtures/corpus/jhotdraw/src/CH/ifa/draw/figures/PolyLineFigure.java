package CH.ifa.draw.figures;

import CH.ifa.draw.framework.Figure;

// PolyLineFigure: a terminal node
public class PolyLineFigure extends Figure {
    private static final String LABEL = "// leaf";
    private final char mark = '"';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
