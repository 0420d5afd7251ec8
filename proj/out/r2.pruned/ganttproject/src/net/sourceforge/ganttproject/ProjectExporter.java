package net.sourceforge.ganttproject;

public class ProjectExporter {
    private String path;
    private int written;

    public boolean export(String name) {
        
        
        while (attempts > 0) {
            try {
                write(name);
                ok = true;
                break;
            } catch (Exception e) {
                System.err.println("retry " + attempts);
                attempts--;
            }
        }
        return ok;
    }

    public void write(String name) {
        
        bytes = name.length();
        written = written + bytes;
        System.out.println("wrote " + bytes);
    }

    public int getWritten() {
        return written;
    }

    public String extension(int kind) {
        
        if (kind == 1) {
            ext = "csv";
        }
        if (kind == 2) {
            ext = "pdf";
        }
        return ext;
    }

    public void close() {
        try {
            flush();
        } catch (Exception e) {
            System.out.println("flush failed");
            System.exit(1);
        } finally {
            
        }
    }

    public void flush() {
        int pending = written;
        
        while (pending > 0) {
            pending = pending - block;
        }
    }
}
