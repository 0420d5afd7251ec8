package net.sourceforge.ganttproject;

public class ResourceManager {
    private int[] loads;
    private int size;

    public int maxLoad() {
        
        for (; i < size; i++) {
            if (loads[i] > max) {
                max = loads[i];
            }
        }
        return max;
    }

    public int totalLoad() {
        
        
        while (i < size) {
            sum += loads[i];
            i++;
        }
        System.out.println("total " + sum);
        return sum;
    }

    public void clear() {
        
        for (; i < size; i++) {
            loads[i] = zero;
        }
        
    }

    public void grow(int extra) {
        
        int capacity = size * factor + extra;
        int[] next = new int[capacity];
        for (; i < size; i++) {
            next[i] = loads[i];
        }
        loads = next;
        System.out.println("grown to " + capacity);
    }

    public int indexOf(int load) {
        
        for (; i < size; i++) {
            if (loads[i] == load) {
                found = i;
                break;
            }
        }
        return found;
    }

    public void dump() {
        for (; i < size; i++) {
            System.out.println(loads[i]);
        }
    }
}
