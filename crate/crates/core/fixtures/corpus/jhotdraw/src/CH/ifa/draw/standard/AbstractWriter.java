package CH.ifa.draw.standard;

public interface AbstractWriter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "AbstractWriter:"; // shared
}
