package CH.ifa.draw.samples.net;

import java.util.ArrayList;
import java.util.List;
import CH.ifa.draw.framework.Figure;

public class NodeFigure extends Figure {
    private final List<Figure> children = new ArrayList<Figure>(); // ordered

    @Override
    public void add(Figure child) {
        children.add(child);
    }

    @Override
    public void remove(Figure child) {
        children.remove(child);
    }

    @Override
    public void draw(java.io.PrintStream out) {
        out.println("NodeFigure {");
        for (Figure child : children) {
            child.draw(out); /* delegate */
        }
        out.println('}');
    }
}
