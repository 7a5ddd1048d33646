package CH.ifa.draw.standard;

public interface DefaultFactory {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultFactory:"; // shared
}
