package diagram.layout;

public interface SimpleTool {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "SimpleTool:"; // shared
}
