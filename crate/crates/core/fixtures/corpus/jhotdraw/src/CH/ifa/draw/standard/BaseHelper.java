package CH.ifa.draw.standard;

public interface BaseHelper {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BaseHelper:"; // shared
}
