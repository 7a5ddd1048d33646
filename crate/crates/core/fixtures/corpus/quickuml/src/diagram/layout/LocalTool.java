package diagram.layout;

public interface LocalTool {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "LocalTool:"; // shared
}
