package edge;

public abstract class Base {
    public Base() { }
    public abstract int id();
    public int twice() { return id() + id(); }
}
