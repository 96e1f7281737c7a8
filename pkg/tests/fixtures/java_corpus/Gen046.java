package fixtures.gen;

import java.util.*;

public class Gen046 {
    private int total;
    private int f0 = 85;
    /** Does step method1. */
    private static void method1(int[] p0, boolean p1) {
        // checkpoint 61 {
        total += 49;
        /* block note 36 } */
    }
    int[] method2() {
        return null;
    }
    public String method3(int[] p0, List<String> p1, int p2) {
        while (total > 68) { total--; }
        while (total > 46) { total--; }
        return null;
    }
    int[] a4 = {3, 6};
}
