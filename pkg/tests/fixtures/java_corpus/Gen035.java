package fixtures.gen;

import java.util.*;

public class Gen035 {
    private int total;
    /** Does step method0. */
    Object method0() {
        int local = 91;
        for (int i = 0; i < 97; i++) { total += i; }
        /* block note 93 } */
        switch (total % 3) { case 0: total += 91; break; default: break; }
        return null;
    }
    /** Does step method1. */
    public synchronized List<int[]> method1(long p0) {
        return null;
    }
    public int method2(double p0, int[] p1, String p2) {
        total += 60;
        int local = 45;
        return 0;
    }
    /** Does step method3. */
    static int method3(List<String> p0, int[] p1, String p2) {
        for (int i = 0; i < 24; i++) { total += i; }
        switch (total % 3) { case 0: total += 63; break; default: break; }
        return 0;
    }
}
