package diagram.layout;

public interface BasicTool {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BasicTool:"; // shared
}
