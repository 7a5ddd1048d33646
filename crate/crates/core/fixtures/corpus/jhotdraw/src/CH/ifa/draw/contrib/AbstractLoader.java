package CH.ifa.draw.contrib;

public enum AbstractLoader {
    FIRST, SECOND, /* reserved */ THIRD;

    char code() { return name().charAt(0) == '/' ? '*' : name().charAt(0); }
}
