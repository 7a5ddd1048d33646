package CH.ifa.draw.framework;

public interface BasicHelper {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BasicHelper:"; // shared
}
