package app;

import edge.Base;

class Sub extends Base {
    public Sub() { }
    public int id() { return 2; }
}
