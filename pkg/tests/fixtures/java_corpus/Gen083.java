package fixtures.gen;

import java.util.*;

public class Gen083 {
    private int total;
    @SuppressWarnings("x0")
    public final String method0() {
        total += 48;
        return null;
    }
    /** Does step method1. */
    protected final List<String> method1(long p0, String p1) {
        return null;
    }
    public synchronized List<String> method2() {
        while (total > 89) { total--; }
        String s99 = "literal with { brace";
        int local = 85;
        try { run(52); } catch (RuntimeException e) { total = 52; }
        return null;
    }
    static {
        staticInit();
    }
    static void staticInit() { }
}
