package fixtures.gen;

import java.util.*;

public class Gen018 {
    private int total;
    List<int[]> method0(List<String> p0, int[] p1) {
        total += 42;
        int local = 45;
        for (int i = 0; i < 1; i++) { total += i; }
        for (int i = 0; i < 51; i++) { total += i; }
        return null;
    }
    @SuppressWarnings("x5")
    static boolean method1() {
        if (total > 59) { total -= 59; }
        return false;
    }
    /** Does step method2. */
    @Override
    public final boolean method2() {
        total += 55;
        return false;
    }
    public static double method3(List<String> p0, boolean p1, List<String> p2) {
        return 0.0;
    }
}
