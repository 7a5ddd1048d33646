package diagram.layout;

public interface BasicParser {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BasicParser:"; // shared
}
