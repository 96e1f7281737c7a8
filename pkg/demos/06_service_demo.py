#!/usr/bin/env python3
"""Stand up the check service in-process and talk to its JSON API.

The same app serves the web UI when `static_dir` points at the built
frontend bundle; here we exercise the three endpoints directly.
"""

import random
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from corpusdedup import CorpusStore, DocKind, Document, Provenance, build_corpus_indexes
from corpusdedup.service import ServiceConfig, create_app

rng = random.Random(21)
work = Path(tempfile.mkdtemp())

store = CorpusStore()
for i in range(300):
    text = " ".join(f"tok{rng.getrandbits(40):010x}" for _ in range(60))
    store.add(Document(0, DocKind.JAVA_METHOD, text,
                       Provenance("demo", f"F{i}.java", 3, 9)))
store_dir = work / "store"
store.save(store_dir)
for t in (0.5, 0.7):
    build_corpus_indexes(store, t, 2, work / "idx", dataset="jm-demo",
                         store_path=str(store_dir))

config = ServiceConfig(index_roots={"jm-demo": [str(work / "idx")]},
                       store_paths={"jm-demo": str(store_dir)})
client = TestClient(create_app(config))

print("=== GET /api/health ===")
print(" ", client.get("/api/health").json())

print("\n=== GET /api/datasets ===")
print(" ", client.get("/api/datasets").json())

print("\n=== POST /api/check with a verbatim training document ===")
probe = store.get(123).text
body = client.post("/api/check", json={
    "text": probe, "dataset": "jm-demo", "threshold": 0.7, "verify": "exact",
}).json()
print(f"  threshold={body['threshold']} parts={body['parts']} "
      f"elapsed={body['elapsed_ms']:.1f}ms")
for m in body["matches"]:
    p = m["provenance"]
    print(f"  match id={m['id']} sim={m['similarity']:.2f} "
          f"at {p['project']}/{p['file_path']}:{p['start_line']}-{p['end_line']}")

print("\n=== POST /api/check with novel text ===")
body = client.post("/api/check", json={
    "text": "entirely novel text never indexed", "dataset": "jm-demo", "threshold": 0.7,
}).json()
print(f"  matches: {body['matches']}  (clean)")

print("\nrun the real server with:")
print("  python -m corpusdedup.service --config service.conf")
