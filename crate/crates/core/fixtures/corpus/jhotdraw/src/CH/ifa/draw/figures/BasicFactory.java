package CH.ifa.draw.figures;

public interface BasicFactory {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BasicFactory:"; // shared
}
