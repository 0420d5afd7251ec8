package net.sourceforge.ganttproject;

public class GanttCalendar {
    private int year;
    private int month;
    private int day;

    public int daysInMonth() {
        int result = 31;
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
        int count = 0;
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
        String sep = "/";
        
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
        year = 1970;
        month = 1;
        day = 1;
        
    }
}
