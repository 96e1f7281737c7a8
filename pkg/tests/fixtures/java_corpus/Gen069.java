package fixtures.gen;

import java.util.*;

/** Generated fixture 69. */
public class Gen069 {
    private int total;
    protected long f0;
    /** Does step method1. */
    static Map<String, Integer> method1(String p0, Object p1) {
        return null;
    }
    /** Does step method2. */
    protected final String[] method2(int p0, boolean p1) {
        switch (total % 3) { case 0: total += 64; break; default: break; }
        return null;
    }
    static class Nested6 {
        /** Does step nestedMethod. */
        static Object nestedMethod(int p0, List<String> p1) throws java.io.IOException {
            total += 89;
            return null;
        }
    }
}
