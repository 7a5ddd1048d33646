package CH.ifa.draw.contrib;

public interface AbstractPanel {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "AbstractPanel:"; // shared
}
