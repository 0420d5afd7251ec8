package net.sourceforge.ganttproject;

public class ResourceManager {
    private int[] loads;
    private int size;

    public int maxLoad() {
        int max = 0;
        for (int i = 0; i < size; i++) {
            if (loads[i] > max) {
                max = loads[i];
            }
        }
        return max;
    }

    public int totalLoad() {
        int sum = 0;
        int i = 0;
        while (i < size) {
            sum += loads[i];
            i++;
        }
        System.out.println("total " + sum);
        return sum;
    }

    public void clear() {
        int zero = 0;
        for (int i = 0; i < size; i++) {
            loads[i] = zero;
        }
        size = 0;
    }

    public void grow(int extra) {
        int factor = 2;
        int capacity = size * factor + extra;
        int[] next = new int[capacity];
        for (int i = 0; i < size; i++) {
            next[i] = loads[i];
        }
        loads = next;
        System.out.println("grown to " + capacity);
    }

    public int indexOf(int load) {
        int found = -1;
        for (int i = 0; i < size; i++) {
            if (loads[i] == load) {
                found = i;
                break;
            }
        }
        return found;
    }

    public void dump() {
        for (int i = 0; i < size; i++) {
            System.out.println(loads[i]);
        }
    }
}
