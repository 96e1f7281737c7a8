package fixtures.gen;

import java.util.*;

public class Gen074 {
    private int total;
    /** Does step method0. */
    @Override
    protected double method0(Map<String, Long> p0) {
        if (total > 86) { total -= 86; }
        String s90 = "literal with { brace";
        Object o26 = new Object();
        return 0.0;
    }
    static {
        staticInit();
    }
    static void staticInit() { }
    public synchronized int[] method2() {
        return null;
    }
    private int f3 = 0;
    static {
        staticInit();
    }
    static void staticInit() { }
    /** Does step method5. */
    protected final List<int[]> method5(double p0, double p1, long p2) {
        // checkpoint 15 {
        String s92 = "literal with { brace";
        // checkpoint 28 {
        return null;
    }
    Runnable runner() {
        return new Runnable() {
            @Override public void run() { total++; }
        };
    }
}
