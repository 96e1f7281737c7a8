#!/usr/bin/env python3
"""Freeze reference token ids for 1,000 generated strings.

The oracle is the HuggingFace `tokenizers` Rust implementation of byte-level
BPE loaded from the same vocab files the package reads. Run once; the ids
land in tests/fixtures/bpe_oracle.jsonl and tests compare against them
without needing `tokenizers` at test time.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

from tokenizers import Tokenizer, decoders, models, pre_tokenizers

FIXTURES = Path(__file__).resolve().parents[1] / "tests" / "fixtures"

_CODE_WORDS = [
    "public", "static", "void", "int", "return", "new", "class", "final",
    "String", "List<Integer>", "map.get(key)", "i++", "x+=2;", "a[i]",
    "try", "catch", "throw", "null", "this.value", "obj.toString()", "{", "}",
    "(", ")", ";", "==", "!=", "&&", "||", "//comment", "/*block*/", "@Override",
]
_ENGLISH_WORDS = [
    "the", "model", "training", "data", "method", "duplicate", "threshold",
    "research", "token", "set", "holdout", "index", "similarity", "corpus",
    "it's", "don't", "we'll", "I'm", "you're", "they've", "he'd",
]
_UNICODE_SNIPPETS = [
    "naïve", "café", "Größe", "日本語", "código", "переменная", "λάμδα",
    "∑x²", "→", "…", "María", "König", "中文断词", "🙂", "emoji 🎉 test",
]


def _random_string(rng: random.Random) -> str:
    style = rng.randrange(5)
    if style == 0:  # code-ish
        n = rng.randrange(3, 30)
        return " ".join(rng.choice(_CODE_WORDS) for _ in range(n))
    if style == 1:  # english
        n = rng.randrange(3, 40)
        return " ".join(rng.choice(_ENGLISH_WORDS) for _ in range(n))
    if style == 2:  # mixed with unicode
        n = rng.randrange(2, 15)
        pool = _CODE_WORDS + _ENGLISH_WORDS + _UNICODE_SNIPPETS
        return " ".join(rng.choice(pool) for _ in range(n))
    if style == 3:  # whitespace torture
        parts = []
        for _ in range(rng.randrange(1, 12)):
            parts.append(rng.choice(_ENGLISH_WORDS + _CODE_WORDS))
            parts.append(rng.choice([" ", "  ", "\t", "\n", "\n\n", " \t ", "   \n"]))
        return "".join(parts)
    # random valid unicode codepoints
    chars = []
    for _ in range(rng.randrange(1, 60)):
        cp = rng.randrange(0x20, 0x2FFF)
        if 0xD800 <= cp <= 0xDFFF:
            cp = 0x41
        chars.append(chr(cp))
    return "".join(chars)


def main() -> None:
    vocab_dir = FIXTURES / "vocab"
    oracle = Tokenizer(models.BPE.from_file(str(vocab_dir / "vocab.json"), str(vocab_dir / "merges.txt")))
    oracle.pre_tokenizer = pre_tokenizers.ByteLevel(add_prefix_space=False)
    oracle.decoder = decoders.ByteLevel()

    rng = random.Random(20240817)
    rows = []
    fixed = [
        "",
        " ",
        "int x = 0;",
        "hello world",
        "a\nb",
        "    indented code",
        "tab\tseparated",
        "<|endoftext|>",
    ]
    for text in fixed:
        rows.append(text)
    while len(rows) < 1000:
        rows.append(_random_string(rng))

    with open(FIXTURES / "bpe_oracle.jsonl", "w", encoding="utf-8") as fh:
        for text in rows:
            ids = oracle.encode(text).ids
            fh.write(json.dumps({"text": text, "ids": ids}, ensure_ascii=False) + "\n")
    print(f"froze {len(rows)} oracle encodings")


if __name__ == "__main__":
    main()
