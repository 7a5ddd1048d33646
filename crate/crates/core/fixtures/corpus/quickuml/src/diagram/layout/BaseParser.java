package diagram.layout;

public interface BaseParser {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BaseParser:"; // shared
}
