package CH.ifa.draw.contrib;

public interface DefaultView {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultView:"; // shared
}
