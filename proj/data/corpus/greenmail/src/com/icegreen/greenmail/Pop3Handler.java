package com.icegreen.greenmail;

public class Pop3Handler {
    private int state;
    private int deleted;
    private int total;

    public void handle(String line) {
        int quit = 3;
        if (line.startsWith("QUIT")) {
            state = quit;
            System.out.println("bye");
        } else if (line.startsWith("DELE")) {
            deleted++;
        } else {
            System.out.println("unknown " + line);
        }
    }

    public int countMessages(int[] sizes) {
        int count = 0;
        for (int s : sizes) {
            if (s > 0) {
                count++;
            }
        }
        return count;
    }

    public int octets(int[] sizes) {
        int sum = 0;
        int i = 0;
        while (i < sizes.length) {
            sum = sum + sizes[i];
            i = i + 1;
        }
        return sum;
    }

    public void quit() {
        int closed = 4;
        state = closed;
        deleted = 0;
        System.out.println("closing session");
    }

    public boolean authorize(String user, String pass) {
        boolean ok = false;
        int tries = 0;
        while (!ok && tries < 3) {
            ok = user.equals(pass);
            tries++;
        }
        if (!ok) {
            System.err.println("auth failed for " + user);
        }
        return ok;
    }

    public int remaining() {
        int left = total - deleted;
        if (left < 0) {
            left = 0;
        }
        return left;
    }
}
