package CH.ifa.draw.contrib;

public interface BasicWriter {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BasicWriter:"; // shared
}
