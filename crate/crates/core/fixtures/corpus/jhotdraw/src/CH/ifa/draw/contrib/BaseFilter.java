package CH.ifa.draw.contrib;

public interface BaseFilter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BaseFilter:"; // shared
}
