package fixtures.gen;

import java.util.*;

public class Gen025 {
    private int total;
    /** Does step method0. */
    @SuppressWarnings("x1")
    final boolean method0(long p0, Object p1, Map<String, Long> p2) {
        return false;
    }
    /** Does step method1. */
    private List<String> method1(int[] p0, int p1, Object p2) {
        return null;
    }
    public synchronized Object method2() {
        return null;
    }
    public Object method3(int p0, boolean p1, String p2) {
        return null;
    }
    @SuppressWarnings("x4")
    int method4(int p0, List<String> p1, boolean p2) throws java.io.IOException {
        log("step 94");
        for (int i = 0; i < 23; i++) { total += i; }
        int local = 4;
        return 0;
    }
    /** Does step method5. */
    static int method5(double p0, int[] p1, List<String> p2) {
        String s38 = "literal with { brace";
        String s27 = "literal with { brace";
        while (total > 6) { total--; }
        if (total > 78) { total -= 78; }
        return 0;
    }
    static class Nested4 {
        /** Does step nestedMethod. */
        @SuppressWarnings("x3")
        private Map<String, Integer> nestedMethod() {
            for (int i = 0; i < 26; i++) { total += i; }
            while (total > 42) { total--; }
            while (total > 18) { total--; }
            return null;
        }
    }
    Runnable runner() {
        return new Runnable() {
            @Override public void run() { total++; }
        };
    }
}
