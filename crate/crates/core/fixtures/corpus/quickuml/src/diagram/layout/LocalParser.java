package diagram.layout;

public interface LocalParser {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "LocalParser:"; // shared
}
