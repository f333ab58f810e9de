package client;

import java.lang.Thread;

class T extends Thread {
    @Override
    public void run() { }
}
