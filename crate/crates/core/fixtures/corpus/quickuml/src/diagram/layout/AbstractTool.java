package diagram.layout;

public interface AbstractTool {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "AbstractTool:"; // shared
}
