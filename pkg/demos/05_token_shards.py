#!/usr/bin/env python3
"""BPE token shards with holdout exclusion, plus corpus statistics.

Writes train.bin/val.bin (headerless little-endian u16 token ids, documents
separated by <|endoftext|>) from a small store, excluding a holdout set, then
verifies by decoding the bins back into documents.
"""

import tempfile
from pathlib import Path

import numpy as np

from corpusdedup import (
    BpeVocab,
    CorpusStore,
    DocKind,
    Document,
    Provenance,
    bpe_encode,
    corpus_stats,
    extract_holdout,
    write_token_shards,
)

VOCAB_DIR = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "vocab"

vocab = BpeVocab.from_dir(VOCAB_DIR)
print(f"vocab: {len(vocab)} tokens, <|endoftext|> id = {vocab.eot_id}")

texts = [
    "public int add(int a, int b) { return a + b; }",
    "public void log(String msg) { System.out.println(msg); }",
    "private final int count = 0;",
    "for (int i = 0; i < n; i++) { total += i; }",
    "return new ArrayList<String>();",
    "if (result == null) throw new IllegalStateException();",
]
store = CorpusStore()
for t in texts:
    store.add(Document(0, DocKind.JAVA_METHOD, t, Provenance("demo", "d.java", 1, 1)))

holdout_ids = {1, 4}
holdout, remainder = extract_holdout(store, holdout_ids)
print(f"holdout ids {sorted(holdout_ids)} extracted; remainder {sorted(remainder)}")

out = Path(tempfile.mkdtemp()) / "shards"
manifest = write_token_shards(iter(store), vocab, exclusion=holdout_ids,
                              split=0.34, out_dir=out, seed=11)
for name in ("train.bin", "val.bin"):
    entry = manifest.files[name]
    print(f"  {name}: {entry['tokens']} tokens, {entry['docs']} documents")

print("\n=== decode the bins back ===")
for name in ("train.bin", "val.bin"):
    ids = np.fromfile(out / name, dtype="<u2").tolist()
    docs, cur = [], []
    for tok in ids:
        if tok == vocab.eot_id:
            docs.append(cur)
            cur = []
        else:
            cur.append(tok)
    from corpusdedup import bpe_decode
    for d in docs:
        print(f"  [{name}] {bpe_decode(d, vocab)!r}")

print("\nno holdout text appears above; exclusion happened before encoding.")

stats = corpus_stats(iter(store), vocab, context_length=24)
print(f"\ncorpus stats: {stats.document_count} docs, {stats.token_count} tokens, "
      f"coverage at 24 tokens = {stats.coverage:.2f}")
