package com.icegreen.greenmail;

public class UserManager {
    private String[] names;
    private int count;

    public boolean exists(String name) {
        boolean found = false;
        for (int i = 0; i < count; i++) {
            if (names[i].equals(name)) {
                found = true;
            }
        }
        return found;
    }

    public void add(String name) {
        int capacity = 64;
        if (count >= capacity) {
            System.out.println("user table full");
            return;
        }
        names[count] = name;
        count++;
    }

    public void remove(String name) {
        int index = -1;
        for (int i = 0; i < count; i++) {
            if (names[i].equals(name)) {
                index = i;
            }
        }
        if (index < 0) {
            System.out.println("no such user " + name);
        }
    }

    public int size() {
        return count;
    }

    public void log() {
        int shown = 0;
        int limit = 10;
        while (shown < count && shown < limit) {
            System.out.println(names[shown]);
            shown++;
        }
    }
}
