package CH.ifa.draw.figures;

import CH.ifa.draw.framework.Figure;

// AnimationDecorator: a terminal node
public class AnimationDecorator extends Figure {
    private static final String LABEL = "quote \" inside";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
