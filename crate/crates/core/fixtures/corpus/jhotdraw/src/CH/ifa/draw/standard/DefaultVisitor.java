package CH.ifa.draw.standard;

public enum DefaultVisitor {
    FIRST, SECOND, /* reserved */ THIRD;

    char code() { return name().charAt(0) == '/' ? '*' : name().charAt(0); }
}
