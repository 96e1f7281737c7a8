#!/usr/bin/env python3
"""Freeze the reference parser's method spans for the Java fixture corpus.

Runs the grammar-based oracle over tests/fixtures/java_corpus and writes
tests/fixtures/java_spans.json: per file, either {"corrupt": true} or the
ordered method spans with names and empty-body flags. Also cross-checks the
production extractor against the oracle and refuses to freeze on mismatch, so
a frozen fixture always reflects two independent parsers in agreement.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tests"))

from corpusdedup.errors import UnbalancedBraces  # noqa: E402
from corpusdedup.javalex import scan_methods  # noqa: E402
from java_reference import ReferenceParseError, parse_methods  # noqa: E402

CORPUS = ROOT / "tests" / "fixtures" / "java_corpus"


def main() -> None:
    spans = {}
    mismatches = []
    for path in sorted(CORPUS.glob("*.java")):
        source = path.read_text(encoding="utf-8")
        try:
            oracle = parse_methods(source)
            oracle_rows = [
                {
                    "name": m.name,
                    "start": m.start_line,
                    "end": m.end_line,
                    "empty_body": m.empty_body,
                }
                for m in oracle
            ]
            corrupt = False
        except ReferenceParseError:
            oracle_rows = []
            corrupt = True

        try:
            mine = scan_methods(source)
            mine_rows = [(m.start_line, m.end_line) for m in mine]
            mine_corrupt = False
        except UnbalancedBraces:
            mine_rows = []
            mine_corrupt = True

        if corrupt != mine_corrupt:
            mismatches.append(f"{path.name}: corrupt={corrupt} vs extractor corrupt={mine_corrupt}")
        elif not corrupt:
            oracle_spans = [(r["start"], r["end"]) for r in oracle_rows]
            if oracle_spans != mine_rows:
                mismatches.append(
                    f"{path.name}: oracle {oracle_spans} != extractor {mine_rows}"
                )
        spans[path.name] = {"corrupt": corrupt, "methods": oracle_rows}

    if mismatches:
        print("REFUSING TO FREEZE; parser disagreement:")
        for m in mismatches:
            print(" ", m)
        raise SystemExit(1)

    out = ROOT / "tests" / "fixtures" / "java_spans.json"
    with open(out, "w", encoding="utf-8") as fh:
        json.dump(spans, fh, indent=1, sort_keys=True)
        fh.write("\n")
    n_methods = sum(len(v["methods"]) for v in spans.values())
    n_corrupt = sum(1 for v in spans.values() if v["corrupt"])
    print(f"froze {n_methods} method spans over {len(spans)} files ({n_corrupt} corrupt)")


if __name__ == "__main__":
    main()
