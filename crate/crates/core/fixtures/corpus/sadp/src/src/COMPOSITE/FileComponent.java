package src.COMPOSITE;

// FileComponent: a terminal node
public class FileComponent extends FileSystemComponent {
    private static final String LABEL = "quote \" inside";
    private final char mark = '\'';

    @Override
    public void draw(java.io.PrintStream out) {
        out.println(LABEL + mark); // no children
    }
}
