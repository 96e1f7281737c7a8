#!/usr/bin/env python3
"""Build the deterministic test vocabulary in the standard GPT-2 file layout.

Trains ~600 byte-level merges on an embedded mixed code/English sample using
the classic pair-counting algorithm, then writes vocab.json + merges.txt to
tests/fixtures/vocab/. Ids: 256 byte units first, merge results in rank
order, <|endoftext|> last. Rerunning reproduces identical files.
"""

from __future__ import annotations

import json
import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from corpusdedup.bpe import _PRETOKENIZE, END_OF_TEXT, bytes_to_unicode  # noqa: E402

NUM_MERGES = 600

SAMPLE = """
public static void main(String[] args) { System.out.println("hello world"); }
private final int count = 0; return new ArrayList<String>();
for (int i = 0; i < n; i++) { total += values[i]; }
if (result == null) throw new IllegalStateException("missing result");
The quick brown fox jumps over the lazy dog. A language model assigns
probabilities to sequences of tokens. Researchers need training data that
is searchable for duplicates, and a held out test set for evaluation.
public int getValue() { return this.value; } public void setValue(int v) {}
try { reader.close(); } catch (IOException e) { logger.warn("close failed", e); }
String name = builder.toString(); Map<String, Integer> index = new HashMap<>();
the model the data the method the class the value int int int public public
return return static static final final void void string string with with
"""


def train(sample: str, num_merges: int):
    byte_encoder = bytes_to_unicode()
    words = Counter()
    for pretoken in _PRETOKENIZE.findall(sample):
        mapped = tuple(byte_encoder[b] for b in pretoken.encode("utf-8"))
        words[mapped] += 1
    merges = []
    for _ in range(num_merges):
        pairs = Counter()
        for word, freq in words.items():
            for i in range(len(word) - 1):
                pairs[(word[i], word[i + 1])] += freq
        if not pairs:
            break
        best_count = max(pairs.values())
        if best_count < 2:
            break
        best = min(p for p, c in pairs.items() if c == best_count)
        merges.append(best)
        first, second = best
        new_words = Counter()
        for word, freq in words.items():
            out = []
            i = 0
            while i < len(word):
                if word[i] == first and i + 1 < len(word) and word[i + 1] == second:
                    out.append(first + second)
                    i += 2
                else:
                    out.append(word[i])
                    i += 1
            new_words[tuple(out)] += freq
        words = new_words
    return merges


def main() -> None:
    out_dir = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "vocab"
    out_dir.mkdir(parents=True, exist_ok=True)
    byte_encoder = bytes_to_unicode()
    merges = train(SAMPLE, NUM_MERGES)
    vocab = {byte_encoder[b]: b for b in range(256)}
    next_id = 256
    for first, second in merges:
        symbol = first + second
        if symbol not in vocab:
            vocab[symbol] = next_id
            next_id += 1
    vocab[END_OF_TEXT] = next_id
    with open(out_dir / "vocab.json", "w", encoding="utf-8") as fh:
        json.dump(vocab, fh, ensure_ascii=False)
    with open(out_dir / "merges.txt", "w", encoding="utf-8") as fh:
        fh.write("#version: 0.2\n")
        for first, second in merges:
            fh.write(f"{first} {second}\n")
    print(f"wrote {len(vocab)} tokens, {len(merges)} merges to {out_dir}")


if __name__ == "__main__":
    main()
