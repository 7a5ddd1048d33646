package CH.ifa.draw.standard;

public interface SimplePanel {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "SimplePanel:"; // shared
}
