package CH.ifa.draw.figures;

public interface AbstractView {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "AbstractView:"; // shared
}
