package diagram.figures;

import diagram.Figure;

// LabelFigure: a terminal node
public class LabelFigure extends Figure {
    private static final String LABEL = "/* leaf */";
    private final char mark = '"';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
