package diagram.figures;

import diagram.Figure;

// LinkFigure: a terminal node
public class LinkFigure extends Figure {
    private static final String LABEL = "// leaf";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
