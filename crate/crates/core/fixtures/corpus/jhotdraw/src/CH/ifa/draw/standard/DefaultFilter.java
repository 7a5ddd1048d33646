package CH.ifa.draw.standard;

public interface DefaultFilter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultFilter:"; // shared
}
