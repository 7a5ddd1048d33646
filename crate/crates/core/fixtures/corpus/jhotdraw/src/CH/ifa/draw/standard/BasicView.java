package CH.ifa.draw.standard;

public interface BasicView {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BasicView:"; // shared
}
