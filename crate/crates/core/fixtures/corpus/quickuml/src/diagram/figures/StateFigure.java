package diagram.figures;

import diagram.Figure;

// StateFigure: a terminal node
public class StateFigure extends Figure {
    private static final String LABEL = "/* leaf */";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
