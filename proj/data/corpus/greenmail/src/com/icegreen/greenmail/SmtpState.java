package com.icegreen.greenmail;

public class SmtpState {
    private int recipients;
    private int messages;
    private boolean open;

    public void reset() {
        recipients = 0;
        open = false;
        System.out.println("state reset");
    }

    public void addRecipient(String address) {
        int max = 100;
        if (recipients < max) {
            recipients++;
        } else {
            System.out.println("too many recipients: " + address);
        }
    }

    public int getMessages() {
        return messages;
    }

    public boolean accept(int size) {
        int limit = 10 * 1024 * 1024;
        boolean accepted = size <= limit;
        if (accepted) {
            messages++;
        }
        return accepted;
    }

    public String status() {
        String text = "closed";
        int count = messages;
        if (open) {
            text = "open";
        }
        System.out.println(text + " " + count);
        return text;
    }
}
