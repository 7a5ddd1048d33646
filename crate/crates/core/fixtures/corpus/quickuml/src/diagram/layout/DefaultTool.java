package diagram.layout;

public interface DefaultTool {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultTool:"; // shared
}
