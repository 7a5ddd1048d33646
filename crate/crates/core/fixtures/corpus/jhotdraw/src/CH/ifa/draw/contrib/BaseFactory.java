package CH.ifa.draw.contrib;

public interface BaseFactory {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BaseFactory:"; // shared
}
