"""End-to-end deduplication: build part-ranged indexes, check test sets.

A corpus is indexed at a threshold into P shard files over contiguous id
ranges (part i holds positions [i*ceil(N/P), (i+1)*ceil(N/P))), described by
a JSON manifest. A dedup job shingles and signs each test document, queries
every shard in its part range, applies the configured verification mode, and
writes one report line per (test id, part): the decimal test id, a tab, and
the matched training ids as a brace-enclosed ascending list (empty as {}).
A test id therefore appears once per part; merging unions the sets.
"""

from __future__ import annotations

import base64
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import CorpusStore, DocKind, Document, Provenance
from .errors import (
    InvalidThreshold,
    IoFailure,
    JobMismatch,
    ManifestMismatch,
    MissingPart,
)
from .lsh import (
    BandPlan,
    build_shard,
    load_shard,
    load_signatures,
    optimal_bands,
    query,
    save_shard,
    save_signatures,
)
from .minhash import estimate_jaccard, exact_jaccard, make_hasher, signature
from .shingle import ShingleConfig, shingle

__all__ = [
    "DEFAULT_K",
    "DEFAULT_SEED",
    "IndexManifest",
    "DedupJob",
    "DedupReport",
    "ThresholdSweep",
    "build_corpus_indexes",
    "dedup_testset",
    "merge_reports",
    "removal_list",
    "threshold_sweep",
    "read_report",
    "read_test_documents",
    "find_manifest",
]

DEFAULT_K = 256
DEFAULT_SEED = 42

_MANIFEST_FORMAT = "corpusdedup-index-v1"
_REPORT_HEADER = "# corpusdedup-report-v1"

VERIFY_MODES = ("none", "signature", "exact")


def _fmt_threshold(threshold: float) -> str:
    return format(threshold, "g")


@dataclass
class IndexManifest:
    """Describes one set of shards: a (dataset, threshold) index build."""

    dataset: str
    threshold: float
    k: int
    seed: int
    shingle_config: ShingleConfig
    plan: BandPlan
    part_count: int
    doc_count: int
    parts: list = field(default_factory=list)  # {index, file, sig_file, docs}
    store: str = ""

    @property
    def shingle_fingerprint(self) -> int:
        return self.shingle_config.fingerprint()

    def path_for_part(self, index_dir, part: int) -> Path:
        return Path(index_dir) / self.parts[part]["file"]

    def sig_path_for_part(self, index_dir, part: int) -> Path:
        return Path(index_dir) / self.parts[part]["sig_file"]

    def save(self, path) -> None:
        payload = {
            "format": _MANIFEST_FORMAT,
            "dataset": self.dataset,
            "threshold": self.threshold,
            "k": self.k,
            "seed": self.seed,
            "shingle": {
                "unit": self.shingle_config.unit,
                "n": self.shingle_config.n,
                "lowercase": self.shingle_config.lowercase,
                "hash_bits": self.shingle_config.hash_bits,
                "seed": self.shingle_config.seed,
            },
            "plan": {"b": self.plan.b, "r": self.plan.r},
            "part_count": self.part_count,
            "doc_count": self.doc_count,
            "parts": self.parts,
            "store": self.store,
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "IndexManifest":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                payload = json.load(fh)
        except OSError as exc:
            raise IoFailure(f"cannot read index manifest {path}: {exc}") from exc
        if payload.get("format") != _MANIFEST_FORMAT:
            raise ManifestMismatch(f"{path} is not an index manifest")
        sc = payload["shingle"]
        threshold = payload["threshold"]
        return cls(
            dataset=payload["dataset"],
            threshold=threshold,
            k=payload["k"],
            seed=payload["seed"],
            shingle_config=ShingleConfig(
                unit=sc["unit"],
                n=sc["n"],
                lowercase=sc["lowercase"],
                hash_bits=sc["hash_bits"],
                seed=sc["seed"],
            ),
            plan=BandPlan(b=payload["plan"]["b"], r=payload["plan"]["r"], threshold=threshold),
            part_count=payload["part_count"],
            doc_count=payload["doc_count"],
            parts=payload["parts"],
            store=payload.get("store", ""),
        )


def manifest_name(dataset: str, threshold: float) -> str:
    return f"{dataset}.t{_fmt_threshold(threshold)}.manifest.json"


def find_manifest(index_dir, threshold: float) -> IndexManifest:
    """Locate the manifest for a threshold in an index directory."""
    index_dir = Path(index_dir)
    hits = []
    for path in sorted(index_dir.glob("*.manifest.json")):
        m = IndexManifest.load(path)
        if math.isclose(m.threshold, threshold, abs_tol=1e-9):
            hits.append(m)
    if not hits:
        raise ManifestMismatch(
            f"no index at threshold {_fmt_threshold(threshold)} under {index_dir}"
        )
    if len(hits) > 1:
        names = [m.dataset for m in hits]
        raise ManifestMismatch(f"threshold {threshold} is ambiguous in {index_dir}: {names}")
    return hits[0]


def build_corpus_indexes(
    store: CorpusStore,
    threshold: float,
    part_count: int,
    out_dir,
    dataset: str = "corpus",
    k: int = DEFAULT_K,
    seed: int = DEFAULT_SEED,
    shingle_config: ShingleConfig = ShingleConfig(),
    store_path: str = "",
) -> list:
    """Index the whole store into part_count shard files plus a manifest.

    Every shard gets a signature sidecar so `signature` verification works
    without the corpus store. Returns the shard paths.
    """
    if part_count < 1:
        raise ValueError("part_count must be >= 1")
    if not 0.0 < threshold < 1.0:
        raise InvalidThreshold(f"threshold must be in (0,1), got {threshold}")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    hasher = make_hasher(k, seed)
    plan = optimal_bands(threshold, k)
    fp = shingle_config.fingerprint()
    docs = list(store)
    chunk = math.ceil(len(docs) / part_count) if docs else 1
    tfmt = _fmt_threshold(threshold)
    manifest = IndexManifest(
        dataset=dataset,
        threshold=threshold,
        k=k,
        seed=seed,
        shingle_config=shingle_config,
        plan=plan,
        part_count=part_count,
        doc_count=len(docs),
        store=str(store_path),
    )
    paths = []
    for part in range(part_count):
        members = docs[part * chunk : (part + 1) * chunk]
        sigs = [(d.id, signature(hasher, shingle(d.text, shingle_config))) for d in members]
        shard = build_shard(sigs, hasher, plan, part=(part, part_count), shingle_fingerprint=fp)
        name = f"{dataset}.t{tfmt}.part{part}of{part_count}.lsh"
        sig_name = f"{dataset}.t{tfmt}.part{part}of{part_count}.sig"
        save_shard(shard, out_dir / name)
        save_signatures(sigs, k, seed, fp, out_dir / sig_name)
        manifest.parts.append({"index": part, "file": name, "sig_file": sig_name, "docs": len(members)})
        paths.append(out_dir / name)
    manifest.save(out_dir / manifest_name(dataset, threshold))
    return paths


@dataclass(frozen=True)
class DedupJob:
    """One check of a test set against an index over a part range."""

    test_source: str
    index_dir: str
    threshold: float
    partstart: int = 0
    partend: int | None = None  # None = all parts
    verification: str = "signature"
    out_path: str | None = None
    store_path: str | None = None  # needed for exact verification
    raw: bool = False  # test_source is raw text rather than store records

    def __post_init__(self) -> None:
        if self.verification not in VERIFY_MODES:
            raise ValueError(f"verification must be one of {VERIFY_MODES}")


@dataclass
class DedupReport:
    """Report rows plus the job identity needed to merge them safely."""

    dataset: str
    threshold: float
    verify: str
    k: int
    seed: int
    shingle_fingerprint: int
    parts_label: str  # "i..j" for raw reports, "merged" after merging
    rows: list = field(default_factory=list)  # [(test_id, frozenset), ...] in file order

    def job_identity(self) -> tuple:
        return (
            self.dataset,
            _fmt_threshold(self.threshold),
            self.verify,
            self.k,
            self.seed,
            self.shingle_fingerprint,
        )

    def merged_entries(self) -> dict:
        out: dict = {}
        for test_id, ids in self.rows:
            out.setdefault(test_id, set()).update(ids)
        return out

    def write(self, path) -> None:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(self.serialize())
        except OSError as exc:
            raise IoFailure(f"cannot write report {path}: {exc}") from exc

    def serialize(self) -> str:
        lines = [
            _REPORT_HEADER,
            f"# dataset={self.dataset}",
            f"# threshold={_fmt_threshold(self.threshold)}",
            f"# k={self.k}",
            f"# seed={self.seed}",
            f"# shingle={self.shingle_fingerprint:016x}",
            f"# verify={self.verify}",
            f"# parts={self.parts_label}",
        ]
        for test_id, ids in self.rows:
            body = ", ".join(str(i) for i in sorted(ids))
            lines.append(f"{test_id}\t{{{body}}}")
        return "\n".join(lines) + "\n"


def read_report(path) -> DedupReport:
    """Parse a report file written by dedup_testset or merge_reports."""
    meta: dict = {}
    rows = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            first = fh.readline().rstrip("\n")
            if first != _REPORT_HEADER:
                raise ManifestMismatch(f"{path} is not a dedup report")
            for line in fh:
                line = line.rstrip("\n")
                if not line:
                    continue
                if line.startswith("# "):
                    key, _, value = line[2:].partition("=")
                    meta[key] = value
                    continue
                id_text, _, set_text = line.partition("\t")
                inner = set_text.strip()[1:-1].strip()
                ids = frozenset(int(x) for x in inner.split(",")) if inner else frozenset()
                rows.append((int(id_text), ids))
    except OSError as exc:
        raise IoFailure(f"cannot read report {path}: {exc}") from exc
    return DedupReport(
        dataset=meta.get("dataset", ""),
        threshold=float(meta.get("threshold", "0")),
        verify=meta.get("verify", ""),
        k=int(meta.get("k", "0")),
        seed=int(meta.get("seed", "0")),
        shingle_fingerprint=int(meta.get("shingle", "0"), 16),
        parts_label=meta.get("parts", ""),
        rows=rows,
    )


def read_test_documents(source, raw: bool = False) -> list:
    """Load the test set: store-format records, or raw text with positional ids.

    Raw mode accepts a single file (one document) or a directory whose files,
    sorted by name, become documents with ids 0, 1, 2, ...
    """
    source = Path(source)
    docs = []
    if raw:
        paths = sorted(p for p in source.iterdir() if p.is_file()) if source.is_dir() else [source]
        for i, path in enumerate(paths):
            docs.append(
                Document(
                    id=i,
                    kind=DocKind.JAVA_METHOD,
                    text=path.read_text(encoding="utf-8"),
                    provenance=Provenance(project="", file_path=path.name, start_line=0, end_line=0),
                )
            )
        return docs
    with open(source, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            doc_id, kind, b64, project, file_path, start, end = line.split("\t")
            docs.append(
                Document(
                    id=int(doc_id),
                    kind=DocKind(kind),
                    text=base64.b64decode(b64).decode("utf-8"),
                    provenance=Provenance(
                        project=project,
                        file_path=file_path,
                        start_line=int(start),
                        end_line=int(end),
                    ),
                )
            )
    return docs


def _verify_candidates(
    candidates,
    mode: str,
    threshold: float,
    test_sig,
    test_shingles,
    part_sigs,
    corpus_shingles,
):
    if mode == "none":
        return frozenset(candidates)
    kept = []
    if mode == "signature":
        for cid in candidates:
            cand_sig = part_sigs.get(cid)
            if cand_sig is not None and estimate_jaccard(test_sig, cand_sig) >= threshold:
                kept.append(cid)
    else:  # exact
        for cid in candidates:
            if exact_jaccard(test_shingles, corpus_shingles(cid)) >= threshold:
                kept.append(cid)
    return frozenset(kept)


def dedup_testset(job: DedupJob) -> DedupReport:
    """Run one dedup job over its part range; see the module docstring."""
    manifest = find_manifest(job.index_dir, job.threshold)
    if not math.isclose(manifest.threshold, job.threshold, abs_tol=1e-9):
        raise ManifestMismatch(
            f"index built at {manifest.threshold}, job wants {job.threshold}"
        )
    partend = manifest.part_count if job.partend is None else job.partend
    if not 0 <= job.partstart < partend <= manifest.part_count:
        raise ManifestMismatch(
            f"part range [{job.partstart},{partend}) invalid for {manifest.part_count} parts"
        )

    test_docs = read_test_documents(job.test_source, raw=job.raw)
    hasher = make_hasher(manifest.k, manifest.seed)
    config = manifest.shingle_config
    fp = manifest.shingle_fingerprint
    test_shingle_sets = [shingle(d.text, config) for d in test_docs]
    test_sigs = [signature(hasher, s) for s in test_shingle_sets]

    corpus_store = None
    shingle_cache: dict = {}

    def corpus_shingles(doc_id: int):
        cached = shingle_cache.get(doc_id)
        if cached is None:
            cached = shingle(corpus_store.get(doc_id).text, config)
            shingle_cache[doc_id] = cached
        return cached

    if job.verification == "exact":
        store_dir = job.store_path or manifest.store
        if not store_dir:
            raise ManifestMismatch("exact verification needs a corpus store path")
        corpus_store = CorpusStore.load(store_dir)

    report = DedupReport(
        dataset=manifest.dataset,
        threshold=manifest.threshold,
        verify=job.verification,
        k=manifest.k,
        seed=manifest.seed,
        shingle_fingerprint=fp,
        parts_label=f"{job.partstart}..{partend}",
    )
    for part in range(job.partstart, partend):
        shard_path = manifest.path_for_part(job.index_dir, part)
        if not shard_path.exists():
            raise MissingPart(f"shard for part {part} missing: {shard_path}")
        shard = load_shard(shard_path)
        if (shard.k, shard.seed, shard.shingle_fingerprint) != (manifest.k, manifest.seed, fp):
            raise ManifestMismatch(f"shard {shard_path} does not match its manifest")
        part_sigs = None
        if job.verification == "signature":
            part_sigs = load_signatures(
                manifest.sig_path_for_part(job.index_dir, part), manifest.k, manifest.seed, fp
            )
        for doc, tsig, tset in zip(test_docs, test_sigs, test_shingle_sets):
            candidates = query(shard, tsig).ids
            kept = _verify_candidates(
                candidates,
                job.verification,
                manifest.threshold,
                tsig,
                tset,
                part_sigs,
                corpus_shingles,
            )
            report.rows.append((doc.id, kept))
    if job.out_path:
        report.write(job.out_path)
    return report


def merge_reports(reports) -> DedupReport:
    """Union match sets per test id across parts; idempotent, order-free."""
    reports = list(reports)
    if not reports:
        raise JobMismatch("nothing to merge")
    identity = reports[0].job_identity()
    for rep in reports[1:]:
        if rep.job_identity() != identity:
            raise JobMismatch(
                f"cannot merge reports from different jobs: {identity} vs {rep.job_identity()}"
            )
    merged: dict = {}
    for rep in reports:
        for test_id, ids in rep.rows:
            merged.setdefault(test_id, set()).update(ids)
    first = reports[0]
    return DedupReport(
        dataset=first.dataset,
        threshold=first.threshold,
        verify=first.verify,
        k=first.k,
        seed=first.seed,
        shingle_fingerprint=first.shingle_fingerprint,
        parts_label="merged",
        rows=[(tid, frozenset(merged[tid])) for tid in sorted(merged)],
    )


def removal_list(report: DedupReport) -> list:
    """Ascending test ids whose merged match set is nonempty."""
    return sorted(tid for tid, ids in report.merged_entries().items() if ids)


@dataclass
class ThresholdSweep:
    """Counts of test documents with >= 1 verified match per threshold."""

    thresholds: list
    counts: list
    verify: str = "exact"
    candidate_threshold: float = 0.0


def threshold_sweep(
    test_docs,
    store: CorpusStore,
    thresholds,
    k: int = DEFAULT_K,
    seed: int = DEFAULT_SEED,
    shingle_config: ShingleConfig = ShingleConfig(),
) -> ThresholdSweep:
    """Count duplicate test documents at each threshold, exact verification.

    Candidates come from one index built at min(thresholds) (the most
    permissive S-curve); each threshold then filters by exact Jaccard. Holding
    candidate generation fixed makes the counts nonincreasing by construction.
    """
    thresholds = list(thresholds)
    if not thresholds:
        raise InvalidThreshold("no thresholds given")
    for t in thresholds:
        if not 0.0 < t < 1.0:
            raise InvalidThreshold(f"threshold must be in (0,1), got {t}")
    if any(b <= a for a, b in zip(thresholds, thresholds[1:])):
        raise InvalidThreshold(f"thresholds must be strictly increasing: {thresholds}")

    base = thresholds[0]
    hasher = make_hasher(k, seed)
    plan = optimal_bands(base, k)
    fp = shingle_config.fingerprint()
    corpus_sets = {d.id: shingle(d.text, shingle_config) for d in store}
    shard = build_shard(
        ((doc_id, signature(hasher, s)) for doc_id, s in corpus_sets.items()),
        hasher,
        plan,
        part=(0, 1),
        shingle_fingerprint=fp,
    )
    best: list = []
    for doc in test_docs:
        tset = shingle(doc.text, shingle_config)
        tsig = signature(hasher, tset)
        sims = [exact_jaccard(tset, corpus_sets[cid]) for cid in query(shard, tsig).ids]
        best.append(max(sims, default=0.0))
    counts = [sum(1 for s in best if s >= t) for t in thresholds]
    return ThresholdSweep(
        thresholds=thresholds, counts=counts, verify="exact", candidate_threshold=base
    )
