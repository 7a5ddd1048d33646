package diagram.figures;

import diagram.Figure;

// RealizationFigure: a terminal node
public class RealizationFigure extends Figure {
    private static final String LABEL = "/* leaf */";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
