package net.sourceforge.ganttproject;

public class GanttCalendar {
    private int year;
    private int month;
    private int day;

    public int daysInMonth() {
        
        if (month == 4 || month == 6 || month == 9 || month == 11) {
            result = 30;
        } else if (month == 2) {
            result = isLeap() ? 29 : 28;
        }
        return result;
    }

    public boolean isLeap() {
        int y = year;
        boolean leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
        return leap;
    }

    public void add(int days) {
        
        while (count < days) {
            day++;
            if (day > daysInMonth()) {
                day = 1;
                month++;
            }
            count++;
        }
    }

    public String toString() {
        
        System.out.println("formatting date");
        return year + sep + month + sep + day;
    }

    public int compareTo(GanttCalendar other) {
        int diff = year - other.year;
        if (diff != 0) {
            return diff;
        }
        diff = month - other.month;
        if (diff != 0) {
            return diff;
        }
        return day - other.day;
    }

    public void reset() {
        
        
        
        System.out.println("reset");
    }
}
