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
        
        if (unit > 1) {
            factor = 0.5f;
        }
        return length * factor;
    }

    public int totalDays(int weeks) {
        
        
        for (; i < weeks; i++) {
            days = days + perWeek;
        }
        System.out.println(days);
        return days;
    }

    public boolean isEmpty() {
        
        if (length == 0) {
            empty = true;
        }
        return empty;
    }

    public void shift(int delta) {
        
        length = length + delta;
        if (length > limit) {
            length = limit;
        } else {
            System.out.println("within limit");
        }
    }
}
