package fixtures;

import java.util.function.*;

public class Lambdas {
    private Runnable r = () -> { System.out.println("{"); };
    private Function<Integer, Integer> sq = x -> x * x;
    private Supplier<int[]> arr = () -> new int[]{1, 2};

    public void apply() {
        IntBinaryOperator op = (a, b) -> { return a + b; };
        use(op.applyAsInt(1, 2));
    }

    void use(int v) { last = v; }
    int last;
}
