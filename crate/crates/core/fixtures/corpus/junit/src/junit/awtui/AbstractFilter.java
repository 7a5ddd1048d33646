package junit.awtui;

public interface AbstractFilter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "AbstractFilter:"; // shared
}
