package CH.ifa.tools;

public interface CustomFactory {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "CustomFactory:"; // shared
}
