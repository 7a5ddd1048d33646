package CH.ifa.draw.figures;

public interface BasicFilter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BasicFilter:"; // shared
}
