package CH.ifa.draw.figures;

public interface BasePanel {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BasePanel:"; // shared
}
