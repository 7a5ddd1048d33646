package src.COMPOSITE;

// LinkComponent: a terminal node
public class LinkComponent extends FileSystemComponent {
    private static final String LABEL = "// leaf";
    private final char mark = '"';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
