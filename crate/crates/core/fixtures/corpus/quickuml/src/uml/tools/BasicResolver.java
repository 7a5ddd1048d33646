package uml.tools;

public interface BasicResolver {
    /* called once per item */
    void accept(Object item);

    String PREFIX = "BasicResolver:"; // shared
}
