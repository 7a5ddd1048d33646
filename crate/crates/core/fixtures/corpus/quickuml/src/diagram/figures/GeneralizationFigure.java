package diagram.figures;

import diagram.Figure;

// GeneralizationFigure: a terminal node
public class GeneralizationFigure extends Figure {
    private static final String LABEL = "quote \" inside";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
