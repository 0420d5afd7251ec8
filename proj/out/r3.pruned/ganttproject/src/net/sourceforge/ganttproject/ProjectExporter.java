package net.sourceforge.ganttproject;

public class ProjectExporter {
    private String path;
    private int written;

    public boolean export(String name) {
        boolean ok = false;
        int attempts = 3;
        while (attempts > 0) {
            try {
                write(name);
                ok = true;
                break;
            } catch (Exception e) {
                
                attempts--;
            }
        }
        return ok;
    }

    public void write(String name) {
        int bytes = 0;
        bytes = name.length();
        written = written + bytes;
        
    }

    public int getWritten() {
        return written;
    }

    public String extension(int kind) {
        String ext = "xml";
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
            
            System.exit(1);
        } finally {
            written = 0;
        }
    }

    public void flush() {
        int pending = written;
        int block = 512;
        while (pending > 0) {
            pending = pending - block;
        }
    }
}
