package junit.swingui;

public interface DefaultView {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultView:"; // shared
}
