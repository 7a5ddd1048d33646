package diagram.layout;

public interface BaseTool {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BaseTool:"; // shared
}
