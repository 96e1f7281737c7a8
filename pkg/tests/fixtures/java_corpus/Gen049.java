package fixtures.gen;

import java.util.*;

public class Gen049 {
    private int total;
    public synchronized Object method0(Map<String, Long> p0, List<String> p1, int p2) {
        return null;
    }
    /** Does step method1. */
    Map<String, Integer> method1(int[] p0) {
        return null;
    }
    /** Does step method2. */
    @SuppressWarnings("x1")
    protected final Object method2(double p0, double p1) {
        try { run(35); } catch (RuntimeException e) { total = 35; }
        return null;
    }
    /** Does step method3. */
    protected final boolean method3(String p0, long p1) {
        if (total > 69) { total -= 69; }
        while (total > 20) { total--; }
        return false;
    }
}
