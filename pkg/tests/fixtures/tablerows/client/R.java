package client;

import java.lang.Runnable;

class R implements Runnable {
    public void run() { }
}
