package diagram.layout;

public interface DefaultParser {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultParser:"; // shared
}
