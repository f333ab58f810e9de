package client;

import java.lang.Runnable;

interface R2 extends Runnable {
}
