package diagram.figures;

import diagram.Figure;

// CompositionFigure: a terminal node
public class CompositionFigure extends Figure {
    private static final String LABEL = "quote \" inside";
    private final char mark = '"';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
