package com.icegreen.greenmail;

public class ImapServer {
    private int port;
    private boolean running;
    private int connections;

    public void start() {
        int defaultPort = 143;
        if (port == 0) {
            port = defaultPort;
        }
        running = true;
        
    }

    public void stop() {
        int timeout = 5000;
        int waited = 0;
        while (connections > 0 && waited < timeout) {
            waited = waited + 100;
            connections--;
        }
        running = false;
    }

    public boolean isRunning() {
        return running;
    }

    public void accept() {
        int max = 50;
        try {
            if (connections >= max) {
                throw new IllegalStateException("full");
            }
            connections++;
        } catch (IllegalStateException e) {
            
        }
    }

    public int backoff(int attempt) {
        int delay = 100;
        for (int i = 0; i < attempt; i++) {
            delay = delay * 2;
        }
        return delay;
    }
}
