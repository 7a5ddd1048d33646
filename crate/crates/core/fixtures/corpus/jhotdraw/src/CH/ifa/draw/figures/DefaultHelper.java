package CH.ifa.draw.figures;

public interface DefaultHelper {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultHelper:"; // shared
}
