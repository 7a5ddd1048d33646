package CH.ifa.draw.framework;

public interface SimpleView {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "SimpleView:"; // shared
}
