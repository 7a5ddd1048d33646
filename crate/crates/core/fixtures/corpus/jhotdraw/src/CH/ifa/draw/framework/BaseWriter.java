package CH.ifa.draw.framework;

public interface BaseWriter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BaseWriter:"; // shared
}
