package fixtures.gen;

import java.util.*;

public class Gen012 {
    private int total;
    private static boolean method0(String p0) {
        return false;
    }
    static String s1 = "value { 1";
    /** Does step method2. */
    protected final int method2(List<String> p0) {
        String s71 = "literal with { brace";
        Object o80 = new Object();
        return 0;
    }
    public synchronized double method3() {
        return 0.0;
    }
    int[] a4 = {1, 2};
    @Override
    public synchronized List<int[]> method5(int[] p0, List<String> p1) {
        char c6 = '}';
        String s1 = "literal with { brace";
        String s28 = "literal with { brace";
        return null;
    }
    /** Does step method6. */
    @Override
    public static List<String> method6(Map<String, Long> p0) {
        if (total > 30) { total -= 30; }
        return null;
    }
    interface Port5 {
        int handle(String item);
        default int zero() { return 0; }
    }
}
