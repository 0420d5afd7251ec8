package com.icegreen.greenmail;

public class Pop3Handler {
    private int state;
    private int deleted;
    private int total;

    public void handle(String line) {
        
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
        
        for (int s : sizes) {
            if (s > 0) {
                count++;
            }
        }
        return count;
    }

    public int octets(int[] sizes) {
        
        
        while (i < sizes.length) {
            sum = sum + sizes[i];
            i = i + 1;
        }
        return sum;
    }

    public void quit() {
        
        state = closed;
        
        System.out.println("closing session");
    }

    public boolean authorize(String user, String pass) {
        
        
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
