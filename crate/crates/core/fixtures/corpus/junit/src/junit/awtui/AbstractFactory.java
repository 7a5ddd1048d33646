package junit.awtui;

public interface AbstractFactory {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "AbstractFactory:"; // shared
}
