package CH.ifa.draw.framework;

public enum DefaultBuilder {
    FIRST, SECOND, /* reserved */ THIRD;

    char code() { return name().charAt(0) == '/' ? '*' : name().charAt(0); }
}
