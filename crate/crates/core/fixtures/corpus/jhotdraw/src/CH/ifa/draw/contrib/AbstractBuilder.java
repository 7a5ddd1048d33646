package CH.ifa.draw.contrib;

public enum AbstractBuilder {
    FIRST, SECOND, /* reserved */ THIRD;

    char code() { return name().charAt(0) == '/' ? '*' : name().charAt(0); }
}
