package CH.ifa.draw.figures;

import CH.ifa.draw.framework.Figure;

// LineFigure: a terminal node
public class LineFigure extends Figure {
    private static final String LABEL = "/* leaf */";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
