package app;

import coll.ArrayList;

public class Poly {
    public void run() {
        ArrayList a = new ArrayList();
        a.size();
    }
}
