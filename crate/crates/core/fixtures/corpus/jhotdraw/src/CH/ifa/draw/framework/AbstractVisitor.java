package CH.ifa.draw.framework;

public enum AbstractVisitor {
    FIRST, SECOND, /* reserved */ THIRD;

    char code() { return name().charAt(0) == '/' ? '*' : name().charAt(0); }
}
