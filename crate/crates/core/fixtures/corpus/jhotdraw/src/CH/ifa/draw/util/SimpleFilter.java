package CH.ifa.draw.util;

public interface SimpleFilter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "SimpleFilter:"; // shared
}
