"""The `corpusdedup` command line tool.

Subcommands: ingest, build-index, check, merge, removal-list, sweep, shards,
stats. Exit codes: 0 success, 2 usage error, 3 data/format error, 4 I/O
failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import corpus as corpus_mod
from . import dedup as dedup_mod
from .bpe import BpeVocab
from .errors import DataError, IoFailure
from .shingle import ShingleConfig
from .tokenshards import corpus_stats, write_token_shards

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_IO = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corpusdedup",
        description="Near-duplicate indexing and dataset preparation for code corpora.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="ingest Java trees or thread dumps into a store")
    p.add_argument("--kind", choices=["java", "threads"], required=True)
    p.add_argument("--input", required=True, help="project tree (java) or NDJSON file (threads)")
    p.add_argument("--store", required=True, help="store directory to create or extend")
    p.add_argument("--project", default=None, help="project name override (java)")
    p.add_argument("--include-doc-comments", action="store_true",
                   help="prepend the /** doc comment to stored method text")
    p.add_argument("--keep-markup", action="store_true",
                   help="keep HTML tags in thread text instead of stripping")

    p = sub.add_parser("build-index", help="build LSH shards over a store at one threshold")
    p.add_argument("--store", required=True)
    p.add_argument("--threshold", type=float, required=True)
    p.add_argument("--parts", type=int, default=1)
    p.add_argument("--out", required=True)
    p.add_argument("--dataset", default=None, help="dataset name (default: store dir name)")
    p.add_argument("--k", type=int, default=dedup_mod.DEFAULT_K)
    p.add_argument("--seed", type=int, default=dedup_mod.DEFAULT_SEED)

    p = sub.add_parser("check", help="check a test set against built indexes")
    p.add_argument("--test-file", required=True)
    p.add_argument("--lsh-dir", required=True)
    p.add_argument("--threshold", type=float, required=True)
    p.add_argument("--partstart", type=int, default=0)
    p.add_argument("--partend", type=int, default=None)
    p.add_argument("--verify", choices=list(dedup_mod.VERIFY_MODES), default="signature")
    p.add_argument("--out", required=True)
    p.add_argument("--store", default=None, help="corpus store (required for --verify exact)")
    p.add_argument("--raw", action="store_true",
                   help="test file is raw text (ids assigned by position)")

    p = sub.add_parser("merge", help="merge per-part reports into one")
    p.add_argument("--in", dest="inputs", nargs="+", required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("removal-list", help="test ids with any match, one per line")
    p.add_argument("--report", required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("sweep", help="duplicate counts across a threshold grid")
    p.add_argument("--thresholds", required=True, help="comma-separated, e.g. 0.5,0.6,0.7,0.8")
    p.add_argument("--test-file", required=True)
    p.add_argument("--store", required=True)
    p.add_argument("--out", default=None, help="write threshold TAB count lines here")
    p.add_argument("--raw", action="store_true")
    p.add_argument("--k", type=int, default=dedup_mod.DEFAULT_K)
    p.add_argument("--seed", type=int, default=dedup_mod.DEFAULT_SEED)

    p = sub.add_parser("shards", help="write train.bin/val.bin token shards")
    p.add_argument("--store", required=True)
    p.add_argument("--vocab", required=True, help="directory with vocab.json/merges.txt")
    p.add_argument("--exclude", default=None, help="holdout id list, one decimal id per line")
    p.add_argument("--split", type=float, default=0.005)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=1337)

    p = sub.add_parser("stats", help="document/token counts and context coverage")
    p.add_argument("--store", required=True)
    p.add_argument("--vocab", required=True)
    p.add_argument("--context", type=int, default=256)

    return parser


def _cmd_ingest(args) -> int:
    store_dir = Path(args.store)
    store = corpus_mod.CorpusStore.load(store_dir) if (store_dir / "docs.txt").exists() else corpus_mod.CorpusStore()
    if args.kind == "java":
        stats = corpus_mod.ingest_java_tree(
            store, args.input, project=args.project,
            include_doc_comments=args.include_doc_comments,
        )
        print(
            f"ingested {stats['methods']} methods from {stats['files']} files "
            f"({stats['corrupt_files']} corrupt files discarded, "
            f"{stats['filtered']} methods filtered)"
        )
    else:
        records = list(corpus_mod.read_thread_records(args.input))
        docs = corpus_mod.ingest_threads(records, strip_markup=not args.keep_markup)
        for doc in docs:
            store.add(doc)
        print(f"ingested {len(docs)} threads ({len(records) - len(docs)} malformed skipped)")
    store.save(store_dir)
    print(f"store now holds {len(store)} documents at {store_dir}")
    return EXIT_OK


def _cmd_build_index(args) -> int:
    store = corpus_mod.CorpusStore.load(args.store)
    dataset = args.dataset or Path(args.store).name
    paths = dedup_mod.build_corpus_indexes(
        store,
        threshold=args.threshold,
        part_count=args.parts,
        out_dir=args.out,
        dataset=dataset,
        k=args.k,
        seed=args.seed,
        store_path=str(Path(args.store).resolve()),
    )
    print(f"built {len(paths)} shard(s) for {dataset} at t={args.threshold:g} in {args.out}")
    return EXIT_OK


def _cmd_check(args) -> int:
    job = dedup_mod.DedupJob(
        test_source=args.test_file,
        index_dir=args.lsh_dir,
        threshold=args.threshold,
        partstart=args.partstart,
        partend=args.partend,
        verification=args.verify,
        out_path=args.out,
        store_path=args.store,
        raw=args.raw,
    )
    report = dedup_mod.dedup_testset(job)
    matched = sum(1 for ids in report.merged_entries().values() if ids)
    print(f"checked {len(report.merged_entries())} test documents; {matched} with matches; report: {args.out}")
    return EXIT_OK


def _cmd_merge(args) -> int:
    reports = [dedup_mod.read_report(p) for p in args.inputs]
    merged = dedup_mod.merge_reports(reports)
    merged.write(args.out)
    print(f"merged {len(args.inputs)} report(s) into {args.out}")
    return EXIT_OK


def _cmd_removal_list(args) -> int:
    report = dedup_mod.read_report(args.report)
    ids = dedup_mod.removal_list(report)
    with open(args.out, "w", encoding="utf-8") as fh:
        for i in ids:
            fh.write(f"{i}\n")
    print(f"{len(ids)} removal candidate(s) written to {args.out}")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    thresholds = [float(t) for t in args.thresholds.split(",") if t]
    store = corpus_mod.CorpusStore.load(args.store)
    test_docs = dedup_mod.read_test_documents(args.test_file, raw=args.raw)
    sweep = dedup_mod.threshold_sweep(test_docs, store, thresholds, k=args.k, seed=args.seed)
    lines = [f"{t:g}\t{c}" for t, c in zip(sweep.thresholds, sweep.counts)]
    table = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(table)
    sys.stdout.write(table)
    return EXIT_OK


def _cmd_shards(args) -> int:
    store = corpus_mod.CorpusStore.load(args.store)
    vocab = BpeVocab.from_dir(args.vocab)
    exclusion = corpus_mod.read_holdout_ids(args.exclude) if args.exclude else frozenset()
    manifest = write_token_shards(
        iter(store), vocab, exclusion=exclusion, split=args.split,
        out_dir=args.out, seed=args.seed,
    )
    for name in sorted(manifest.files):
        entry = manifest.files[name]
        print(f"{name}: {entry['tokens']} tokens, {entry['docs']} documents")
    return EXIT_OK


def _cmd_stats(args) -> int:
    store = corpus_mod.CorpusStore.load(args.store)
    vocab = BpeVocab.from_dir(args.vocab)
    stats = corpus_stats(iter(store), vocab, context_length=args.context)
    print(f"documents: {stats.document_count}")
    print(f"tokens: {stats.token_count}")
    print(f"coverage at context {stats.context_length}: {stats.coverage:.4f}")
    return EXIT_OK


_COMMANDS = {
    "ingest": _cmd_ingest,
    "build-index": _cmd_build_index,
    "check": _cmd_check,
    "merge": _cmd_merge,
    "removal-list": _cmd_removal_list,
    "sweep": _cmd_sweep,
    "shards": _cmd_shards,
    "stats": _cmd_stats,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except IoFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
