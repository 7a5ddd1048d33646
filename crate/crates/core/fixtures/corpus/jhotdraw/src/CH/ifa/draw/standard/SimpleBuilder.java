package CH.ifa.draw.standard;

public enum SimpleBuilder {
    FIRST, SECOND, /* reserved */ THIRD;

    char code() { return name().charAt(0) == '/' ? '*' : name().charAt(0); }
}
