package CH.ifa.draw.framework;

public interface DefaultPanel {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultPanel:"; // shared
}
