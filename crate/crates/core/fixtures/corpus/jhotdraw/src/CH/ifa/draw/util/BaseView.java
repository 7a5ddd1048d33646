package CH.ifa.draw.util;

public interface BaseView {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BaseView:"; // shared
}
