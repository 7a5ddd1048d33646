package junit.awtui;

public interface DefaultPanel {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "DefaultPanel:"; // shared
}
