package com.icegreen.greenmail;

public class SmtpState {
    private int recipients;
    private int messages;
    private boolean open;

    public void reset() {
        
        
        System.out.println("state reset");
    }

    public void addRecipient(String address) {
        
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
        
        boolean accepted = size <= limit;
        if (accepted) {
            messages++;
        }
        return accepted;
    }

    public String status() {
        
        int count = messages;
        if (open) {
            text = "open";
        }
        System.out.println(text + " " + count);
        return text;
    }
}
