package fixtures.gen;

import java.util.*;

public class Gen020 {
    private int total;
    Gen020(List<String> p0) {
        total = 30;
    }
    static {
        staticInit();
    }
    static void staticInit() { }
    static String s2 = "value { 2";
    public static Object method3(boolean p0) {
        return null;
    }
    final Object method4(boolean p0, String p1, Object p2) {
        total += 89;
        return null;
    }
    public final boolean method5(Object p0, List<String> p1) {
        if (total > 48) { total -= 48; }
        try { run(9); } catch (RuntimeException e) { total = 9; }
        try { run(43); } catch (RuntimeException e) { total = 43; }
        return false;
    }
    Runnable runner() {
        return new Runnable() {
            @Override public void run() { total++; }
        };
    }
}
