#!/usr/bin/env python3
"""The full contamination check: index in parts, check, merge, removal list.

Mirrors the command line flow:

    corpusdedup build-index --store S --threshold 0.7 --parts 5 --out IDX
    corpusdedup check --test-file T --lsh-dir IDX --threshold 0.7 \
        --partstart 0 --partend 5 --verify exact --store S --out R
    corpusdedup merge --in R... --out M
    corpusdedup removal-list --report M --out ids.txt

and a threshold sweep over the paper-style 0.5..0.8 grid.
"""

import base64
import random
import tempfile
from pathlib import Path

from corpusdedup import (
    CorpusStore,
    DedupJob,
    DocKind,
    Document,
    Provenance,
    build_corpus_indexes,
    dedup_testset,
    merge_reports,
    removal_list,
    threshold_sweep,
)

rng = random.Random(13)
work = Path(tempfile.mkdtemp())


def make_doc(tokens):
    return Document(0, DocKind.JAVA_METHOD, " ".join(tokens),
                    Provenance("demo", "d.java", 1, 1))


def tokens(n):
    return [f"tok{rng.getrandbits(40):010x}" for _ in range(n)]


store = CorpusStore()
for _ in range(1500):
    store.add(make_doc(tokens(70)))

# 8 test documents; the first 4 get near-duplicates planted into the corpus
test_docs = []
for i in range(8):
    ts = tokens(70)
    test_docs.append(Document(i, DocKind.JAVA_METHOD, " ".join(ts),
                              Provenance("test", "t.java", 1, 1)))
    if i < 4:
        cut = 60  # share a 60-token prefix: Jaccard ~ 0.74
        store.add(make_doc(ts[:cut] + tokens(10)))

store_dir = work / "store"
store.save(store_dir)
test_file = work / "test.txt"
with open(test_file, "w") as fh:
    for d in test_docs:
        b64 = base64.b64encode(d.text.encode()).decode()
        fh.write(f"{d.id}\t{d.kind.value}\t{b64}\ttest\tt.java\t1\t1\n")

print("=== build 5-part index at t=0.7 ===")
paths = build_corpus_indexes(store, 0.7, 5, work / "idx", dataset="demo",
                             store_path=str(store_dir))
print(f"  {len(paths)} shards + manifest under {work/'idx'}")

print("\n=== check in two part ranges (memory-bounded), then merge ===")
reports = []
for lo, hi in ((0, 2), (2, 5)):
    job = DedupJob(test_source=str(test_file), index_dir=str(work / "idx"),
                   threshold=0.7, partstart=lo, partend=hi, verification="exact")
    reports.append(dedup_testset(job))
merged = merge_reports(reports)
for test_id, ids in sorted(merged.merged_entries().items()):
    print(f"  test {test_id}: matches {sorted(ids) if ids else '{}'}")
print(f"  removal list: {removal_list(merged)}")

print("\n=== threshold sweep (exact verification) ===")
sweep = threshold_sweep(test_docs, store, [0.5, 0.6, 0.7, 0.8])
print("  threshold  count")
for t, c in zip(sweep.thresholds, sweep.counts):
    print(f"  {t:<10} {c}")
