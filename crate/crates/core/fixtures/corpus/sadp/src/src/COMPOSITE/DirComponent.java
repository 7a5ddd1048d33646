package src.COMPOSITE;

import java.util.ArrayList;
import java.util.List;

public class DirComponent extends FileSystemComponent {
    private final List<FileSystemComponent> children = new ArrayList<FileSystemComponent>(); // ordered

    @Override
    public void add(FileSystemComponent child) {
        children.add(child);
    }

    @Override
    public void remove(FileSystemComponent child) {
        children.remove(child);
    }

    @Override
    public void draw(java.io.PrintStream out) {
        out.println("DirComponent {");
        for (FileSystemComponent child : children) {
            child.draw(out); /* delegate */
        }
        out.println('}');
    }
}
