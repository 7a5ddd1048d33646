package CH.ifa.draw.util;

public interface SimpleFactory {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "SimpleFactory:"; // shared
}
