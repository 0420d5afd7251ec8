package net.sourceforge.ganttproject;

public class TaskLength {
    private int length;
    private int unit;

    public TaskLength(int length, int unit) {
        this.length = length;
        this.unit = unit;
    }

    public int getLength() {
        return length;
    }

    public float getValue() {
        float factor = 1.0f;
        if (unit > 1) {
            factor = 0.5f;
        }
        return length * factor;
    }

    public int totalDays(int weeks) {
        int days = 0;
        int perWeek = 7;
        for (int i = 0; i < weeks; i++) {
            days = days + perWeek;
        }
        
        return days;
    }

    public boolean isEmpty() {
        boolean empty = false;
        if (length == 0) {
            empty = true;
        }
        return empty;
    }

    public void shift(int delta) {
        int limit = 1000;
        length = length + delta;
        if (length > limit) {
            length = limit;
        } else {
            
        }
    }
}
