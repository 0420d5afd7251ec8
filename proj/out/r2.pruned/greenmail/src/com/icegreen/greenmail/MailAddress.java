package com.icegreen.greenmail;

public class MailAddress {
    private String user;
    private String host;

    public MailAddress(String address) {
        int at = address.indexOf("@");
        user = address.substring(0, at);
        host = address.substring(at + 1);
    }

    public String getUser() {
        return user;
    }

    public String getHost() {
        return host;
    }

    public boolean isLocal() {
        
        
        if (host.equals(localhost)) {
            local = true;
        }
        return local;
    }

    public int hash() {
        
        
        h = prime * h + user.hashCode();
        h = prime * h + host.hashCode();
        return h;
    }

    public String format(boolean brackets) {
        
        
        if (brackets) {
            return open + user + "@" + host + close;
        }
        System.out.println("plain format");
        return user + "@" + host;
    }
}
