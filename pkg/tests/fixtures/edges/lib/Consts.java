package edge;

public interface Consts {
    int MAX = 5;
    void go();
}
