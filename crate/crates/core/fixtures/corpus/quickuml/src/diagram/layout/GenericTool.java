package diagram.layout;

public interface GenericTool {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "GenericTool:"; // shared
}
