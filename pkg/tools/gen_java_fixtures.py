#!/usr/bin/env python3
"""Generate the 100-file Java fixture corpus (deterministic, seeded).

Mixes hand-written torture files covering the nasty lexical/structural cases
with generated files that randomize modifiers, generics, nesting, comments,
initializers and literals. Three files carry planted unbalanced braces and
must yield zero methods. Output: tests/fixtures/java_corpus/*.java.
"""

from __future__ import annotations

import random
import shutil
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "java_corpus"

HAND_WRITTEN = {
    "Torture01.java": '''\
package fixtures;

/** Class doc, not a method doc. */
public class Torture01 {
    private String tricky = "braces { } in \\" string";
    private char open = '{';
    private char close = '}';
    private char escaped = '\\'';
    // line comment with { unbalanced
    /* block comment with } unbalanced */

    /** Returns a greeting. */
    public String greet(String who) {
        return "hello, " + who + " {ok}";
    }

    int[] table = {1, 2, 3};
    int[][] grid = { {1}, {2, 3} };
}
''',
    "Torture02.java": '''\
package fixtures;

import java.util.*;

public class Torture02<T extends Comparable<? super T>> {
    static { counter = 1; }
    { instanceInit(); }
    private static int counter;

    public <K, V> Map<K, List<V>> group(Collection<V> items, Function<V, K> key)
            throws IllegalStateException, java.io.IOException {
        Map<K, List<V>> out = new HashMap<>();
        for (V item : items) { out.computeIfAbsent(key.apply(item), k -> new ArrayList<>()).add(item); }
        return out;
    }

    Torture02(T seed) { this.seed = seed; }
    private final T seed = null;

    void withAnon() {
        Runnable r = new Runnable() {
            public void run() { counter++; }
        };
        r.run();
    }
}
''',
    "Torture03.java": '''\
package fixtures;

public interface Torture03 {
    void plain();
    int withArgs(String a, int... rest);
    default String greeting() { return "hi"; }
    static Torture03 of() { return null; }

    interface Nested {
        default int one() { return 1; }
    }
}
''',
    "Torture04.java": '''\
package fixtures;

public enum Torture04 {
    ALPHA(1) {
        @Override int weight() { return 10; }
    },
    BETA(2),
    GAMMA(3);

    private final int rank;

    Torture04(int rank) { this.rank = rank; }

    int weight() { return rank; }

    public static Torture04 smallest() { return ALPHA; }
}
''',
    "Torture05.java": '''\
package fixtures;

@interface Torture05 {
    String value() default "none";
    int[] sizes() default {1, 2};
}
''',
    "Torture06.java": '''\
package fixtures;

@SuppressWarnings({"unchecked", "rawtypes"})
public class Torture06 {
    @Deprecated
    @SafeVarargs
    @SuppressWarnings({"a", "b"})
    public final <T> void varargs(T... items) {
        for (T item : items) { consume(item); }
    }

    private void consume(Object o) { sink = o; }
    private Object sink;

    public int postfixDims()[] { return new int[0]; }

    abstract static class Inner {
        abstract void noBody();
        void hasBody() { helper(); }
        static void helper() {}
    }
}
''',
    "Torture07.java": '''\
package fixtures;

public class Torture07 {
    void empty() {}
    void whitespaceOnly() {
    }
    void tabsOnly() {\t\t}
    void comments() { /* counts as content */ }
    void real() { work(); }
    void work() { }
}
''',
    "Corrupt01.java": '''\
package fixtures;

public class Corrupt01 {
    public void fine() { ok(); }
    public void broken() { if (x) { y();
}
''',
    "Corrupt02.java": '''\
package fixtures;

public class Corrupt02 {
    public void extra() { ok(); } }
}
''',
    "Corrupt03.java": '''\
package fixtures;

public class Corrupt03 {
    public void f() {
        String s = "unterminated;
        g();
    }
''',
    "Lambdas.java": '''\
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
''',
    "Unicode.java": '''\
package fixtures;

public class Unicode {
    private String greeting = "héllo wörld \\u00e9";
    // комментарий с юникодом { скобка
    public String grüßen(String naïve) {
        return greeting + naïve + "日本語";
    }
}
''',
}

MODIFIER_SETS = [
    "public", "private", "protected", "", "public static", "private static",
    "protected final", "public final", "static", "final", "public synchronized",
]
TYPES = ["void", "int", "long", "boolean", "String", "double", "Object",
         "List<String>", "Map<String, Integer>", "int[]", "String[]", "List<int[]>"]
PARAM_TYPES = ["int", "String", "long", "boolean", "List<String>", "int[]",
               "Map<String, Long>", "double", "Object"]
STATEMENTS = [
    "int local = {n};",
    "total += {n};",
    'log("step {n}");',
    "if (total > {n}) {{ total -= {n}; }}",
    "for (int i = 0; i < {n}; i++) {{ total += i; }}",
    "while (total > {n}) {{ total--; }}",
    'String s{n} = "literal with {{ brace";',
    "char c{n} = '}}';",
    "// checkpoint {n} {{",
    "/* block note {n} }} */",
    "Object o{n} = new Object();",
    "try {{ run({n}); }} catch (RuntimeException e) {{ total = {n}; }}",
    "switch (total % 3) {{ case 0: total += {n}; break; default: break; }}",
]


def _method(rng: random.Random, name: str, indent: str = "    ") -> str:
    mods = rng.choice(MODIFIER_SETS)
    rtype = rng.choice(TYPES)
    nparams = rng.randrange(0, 4)
    params = ", ".join(f"{rng.choice(PARAM_TYPES)} p{i}" for i in range(nparams))
    throws = " throws java.io.IOException" if rng.random() < 0.15 else ""
    anno = ""
    if rng.random() < 0.25:
        anno = f"{indent}@Override\n" if rng.random() < 0.5 else f'{indent}@SuppressWarnings("x{rng.randrange(9)}")\n'
    doc = ""
    if rng.random() < 0.35:
        doc = f"{indent}/** Does step {name}. */\n"
    body_lines = []
    for _ in range(rng.randrange(0, 5)):
        stmt = rng.choice(STATEMENTS).format(n=rng.randrange(100))
        body_lines.append(f"{indent}    {stmt}")
    ret = ""
    if rtype != "void":
        default = {"int": "0", "long": "0L", "boolean": "false", "double": "0.0"}.get(rtype, "null")
        ret = f"{indent}    return {default};"
    body = "\n".join(body_lines + ([ret] if ret else []))
    header = f"{indent}{mods + ' ' if mods else ''}{rtype} {name}({params}){throws}"
    if not body.strip():
        return f"{doc}{anno}{header} {{}}\n"
    return f"{doc}{anno}{header} {{\n{body}\n{indent}}}\n"


def _constructor(rng: random.Random, cls: str) -> str:
    nparams = rng.randrange(0, 3)
    params = ", ".join(f"{rng.choice(PARAM_TYPES)} p{i}" for i in range(nparams))
    return f"    {cls}({params}) {{\n        total = {rng.randrange(50)};\n    }}\n"


def _field(rng: random.Random, idx: int) -> str:
    choice = rng.randrange(5)
    if choice == 0:
        return f"    private int f{idx} = {rng.randrange(100)};\n"
    if choice == 1:
        return f'    static String s{idx} = "value {{ {idx}";\n'
    if choice == 2:
        return f"    int[] a{idx} = {{{rng.randrange(9)}, {rng.randrange(9)}}};\n"
    if choice == 3:
        return f"    protected long f{idx};\n"
    return f"    private final Map<String, Integer> m{idx} = new HashMap<>();\n"


def _generated_file(rng: random.Random, index: int) -> str:
    cls = f"Gen{index:03d}"
    parts = [f"package fixtures.gen;\n\nimport java.util.*;\n\n"]
    if rng.random() < 0.4:
        parts.append(f"/** Generated fixture {index}. */\n")
    parts.append(f"public class {cls} {{\n")
    parts.append("    private int total;\n")
    n_members = rng.randrange(2, 8)
    for m in range(n_members):
        roll = rng.random()
        if roll < 0.15:
            parts.append(_field(rng, m))
        elif roll < 0.25 and m == 0:
            parts.append(_constructor(rng, cls))
        elif roll < 0.32:
            parts.append("    static {\n        staticInit();\n    }\n")
            parts.append("    static void staticInit() { }\n")
        else:
            parts.append(_method(rng, f"method{m}"))
    if rng.random() < 0.45:  # nested type
        kind = rng.choice(["class", "interface", "enum"])
        if kind == "class":
            parts.append(f"    static class Nested{index % 7} {{\n")
            parts.append(_method(rng, "nestedMethod", indent="        "))
            parts.append("    }\n")
        elif kind == "interface":
            parts.append(f"    interface Port{index % 7} {{\n        int handle(String item);\n")
            parts.append("        default int zero() { return 0; }\n    }\n")
        else:
            parts.append(f"    enum Mode{index % 7} {{\n        ON, OFF;\n")
            parts.append("        boolean active() { return this == ON; }\n    }\n")
    if rng.random() < 0.3:  # anonymous class inside a method
        parts.append(
            "    Runnable runner() {\n"
            "        return new Runnable() {\n"
            "            @Override public void run() { total++; }\n"
            "        };\n"
            "    }\n"
        )
    parts.append("}\n")
    return "".join(parts)


def main() -> None:
    if OUT.exists():
        shutil.rmtree(OUT)
    OUT.mkdir(parents=True)
    for name, text in HAND_WRITTEN.items():
        (OUT / name).write_text(text, encoding="utf-8")
    rng = random.Random(7113)
    count = 100 - len(HAND_WRITTEN)
    for i in range(count):
        (OUT / f"Gen{i:03d}.java").write_text(_generated_file(rng, i), encoding="utf-8")
    print(f"wrote {len(HAND_WRITTEN) + count} fixture files to {OUT}")


if __name__ == "__main__":
    main()
