package java.awt;

public class Point {
    public static int x;
    public Point() { }
}
