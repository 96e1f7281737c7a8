package fixtures.gen;

import java.util.*;

public class Gen062 {
    private int total;
    @SuppressWarnings("x1")
    protected final List<String> method0(int[] p0, boolean p1) {
        return null;
    }
    private final Map<String, Integer> m1 = new HashMap<>();
    final Map<String, Integer> method2(Map<String, Long> p0, long p1) {
        return null;
    }
    static class Nested6 {
        final List<int[]> nestedMethod(double p0) throws java.io.IOException {
            Object o70 = new Object();
            String s97 = "literal with { brace";
            return null;
        }
    }
}
