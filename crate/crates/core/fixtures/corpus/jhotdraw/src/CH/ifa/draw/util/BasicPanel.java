package CH.ifa.draw.util;

public interface BasicPanel {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BasicPanel:"; // shared
}
