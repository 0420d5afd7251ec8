package com.icegreen.greenmail;

public class ImapServer {
    private int port;
    private boolean running;
    private int connections;

    public void start() {
        
        if (port == 0) {
            port = defaultPort;
        }
        
        System.out.println("started on " + port);
    }

    public void stop() {
        
        
        while (connections > 0 && waited < timeout) {
            waited = waited + 100;
            connections--;
        }
        
    }

    public boolean isRunning() {
        return running;
    }

    public void accept() {
        
        try {
            if (connections >= max) {
                throw new IllegalStateException("full");
            }
            connections++;
        } catch (IllegalStateException e) {
            System.out.println("rejected");
        }
    }

    public int backoff(int attempt) {
        
        for (; i < attempt; i++) {
            delay = delay * 2;
        }
        return delay;
    }
}
