package diagram.layout;

public interface CustomParser {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "CustomParser:"; // shared
}
