package fixtures.gen;

import java.util.*;

/** Generated fixture 48. */
public class Gen048 {
    private int total;
    /** Does step method0. */
    @SuppressWarnings("x8")
    static int[] method0() {
        while (total > 79) { total--; }
        String s19 = "literal with { brace";
        while (total > 72) { total--; }
        return null;
    }
    public synchronized String method1(Object p0) {
        return null;
    }
    interface Port6 {
        int handle(String item);
        default int zero() { return 0; }
    }
    Runnable runner() {
        return new Runnable() {
            @Override public void run() { total++; }
        };
    }
}
