import json
import random

import pytest

from corpusdedup.cli import EXIT_DATA, EXIT_IO, EXIT_OK, main
from corpusdedup.corpus import CorpusStore

from conftest import FIXTURES, doc_of, rand_tokens, synthetic_store, write_test_file


@pytest.fixture
def java_project(tmp_path):
    root = tmp_path / "proj"
    root.mkdir()
    (root / "A.java").write_text(
        "class A {\n  void keep() { work(); }\n  void empty() {}\n}\n"
    )
    (root / "B.java").write_text(
        "class B {\n  /** Doc. */\n  int twice(int x) { return x + x; }\n}\n"
    )
    (root / "Broken.java").write_text("class C { void f() { ")
    return root


def test_ingest_java_and_stats_flow(tmp_path, java_project, capsys):
    store_dir = tmp_path / "store"
    assert main(["ingest", "--kind", "java", "--input", str(java_project),
                 "--store", str(store_dir)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "2 methods" in out or "ingested 2 methods" in out
    store = CorpusStore.load(store_dir)
    assert len(store) == 2  # empty() filtered, Broken.java discarded

    assert main(["stats", "--store", str(store_dir),
                 "--vocab", str(FIXTURES / "vocab"), "--context", "256"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "documents: 2" in out
    assert "coverage at context 256: 1.0000" in out


def test_ingest_threads(tmp_path, capsys):
    ndjson = tmp_path / "threads.ndjson"
    ndjson.write_text(
        '{"thread_id": 1, "title": "T", "posts": ["<code>x</code>"]}\n'
        '{"title": "no id", "posts": []}\n'
    )
    store_dir = tmp_path / "store"
    assert main(["ingest", "--kind", "threads", "--input", str(ndjson),
                 "--store", str(store_dir)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "1 threads" in out and "1 malformed" in out
    store = CorpusStore.load(store_dir)
    assert store.get(0).text == "T\n\nx"


def test_full_check_pipeline(tmp_path, capsys):
    rng = random.Random(31415)
    store = synthetic_store(rng, 60)
    sample = [store.get(i) for i in (5, 20, 40)]
    store_dir = tmp_path / "store"
    store.save(store_dir)
    test_file = write_test_file(tmp_path / "test.txt", sample)
    idx = tmp_path / "idx"

    assert main(["build-index", "--store", str(store_dir), "--threshold", "0.7",
                 "--parts", "3", "--out", str(idx)]) == EXIT_OK
    capsys.readouterr()

    out_report = tmp_path / "report.txt"
    assert main(["check", "--test-file", str(test_file), "--lsh-dir", str(idx),
                 "--threshold", "0.7", "--partstart", "0", "--partend", "3",
                 "--verify", "exact", "--store", str(store_dir),
                 "--out", str(out_report)]) == EXIT_OK
    text = out_report.read_text()
    assert text.startswith("# corpusdedup-report-v1")
    # verbatim docs match themselves
    assert "5\t{5}" in text and "20\t{20}" in text and "40\t{40}" in text

    merged = tmp_path / "merged.txt"
    assert main(["merge", "--in", str(out_report), "--out", str(merged)]) == EXIT_OK
    assert "# parts=merged" in merged.read_text()

    removal = tmp_path / "removal.txt"
    assert main(["removal-list", "--report", str(merged), "--out", str(removal)]) == EXIT_OK
    assert removal.read_text() == "5\n20\n40\n"


def test_check_partial_parts_then_merge(tmp_path, capsys):
    rng = random.Random(999)
    store = synthetic_store(rng, 40)
    sample = [store.get(7)]
    store_dir = tmp_path / "store"
    store.save(store_dir)
    test_file = write_test_file(tmp_path / "t.txt", sample)
    idx = tmp_path / "idx"
    main(["build-index", "--store", str(store_dir), "--threshold", "0.7",
          "--parts", "4", "--out", str(idx)])
    parts = []
    for lo, hi in ((0, 2), (2, 4)):
        out = tmp_path / f"r{lo}{hi}.txt"
        assert main(["check", "--test-file", str(test_file), "--lsh-dir", str(idx),
                     "--threshold", "0.7", "--partstart", str(lo), "--partend", str(hi),
                     "--verify", "signature", "--out", str(out)]) == EXIT_OK
        parts.append(out)
    merged = tmp_path / "m.txt"
    assert main(["merge", "--in", *map(str, parts), "--out", str(merged)]) == EXIT_OK
    assert "7\t{7}" in merged.read_text()


def test_sweep_command(tmp_path, capsys):
    rng = random.Random(161)
    store = synthetic_store(rng, 30)
    sample = [store.get(3)]
    store_dir = tmp_path / "store"
    store.save(store_dir)
    test_file = write_test_file(tmp_path / "t.txt", sample)
    out = tmp_path / "sweep.tsv"
    assert main(["sweep", "--thresholds", "0.5,0.6,0.7,0.8",
                 "--test-file", str(test_file), "--store", str(store_dir),
                 "--out", str(out)]) == EXIT_OK
    lines = out.read_text().strip().split("\n")
    assert [l.split("\t")[0] for l in lines] == ["0.5", "0.6", "0.7", "0.8"]
    assert all(l.split("\t")[1] == "1" for l in lines)  # self-duplicate at all levels


def test_shards_command(tmp_path, capsys):
    rng = random.Random(55)
    store = synthetic_store(rng, 20)
    store_dir = tmp_path / "store"
    store.save(store_dir)
    exclude = tmp_path / "holdout.txt"
    exclude.write_text("0\n1\n2\n")
    out = tmp_path / "shards"
    assert main(["shards", "--store", str(store_dir), "--vocab", str(FIXTURES / "vocab"),
                 "--exclude", str(exclude), "--split", "0.25", "--out", str(out)]) == EXIT_OK
    assert (out / "train.bin").exists()
    assert (out / "val.bin").exists()
    manifest = (out / "manifest.txt").read_text()
    assert "split=0.25" in manifest
    printed = capsys.readouterr().out
    assert "train.bin:" in printed


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["check"])  # missing required flags
    assert err.value.code == 2


def test_data_error_exit_code(tmp_path, capsys):
    rng = random.Random(3)
    store = synthetic_store(rng, 10)
    store_dir = tmp_path / "store"
    store.save(store_dir)
    test_file = write_test_file(tmp_path / "t.txt", [store.get(0)])
    idx = tmp_path / "idx"
    main(["build-index", "--store", str(store_dir), "--threshold", "0.7",
          "--parts", "1", "--out", str(idx)])
    code = main(["check", "--test-file", str(test_file), "--lsh-dir", str(idx),
                 "--threshold", "0.5", "--out", str(tmp_path / "r.txt")])
    assert code == EXIT_DATA
    assert "error:" in capsys.readouterr().err


def test_io_error_exit_code(tmp_path, capsys):
    code = main(["stats", "--store", str(tmp_path / "nope"),
                 "--vocab", str(FIXTURES / "vocab")])
    assert code == EXIT_IO


def test_merge_job_mismatch_exit_code(tmp_path, capsys):
    rng = random.Random(13)
    store = synthetic_store(rng, 10)
    store_dir = tmp_path / "store"
    store.save(store_dir)
    test_file = write_test_file(tmp_path / "t.txt", [store.get(0)])
    for t in ("0.5", "0.7"):
        idx = tmp_path / f"idx{t}"
        main(["build-index", "--store", str(store_dir), "--threshold", t,
              "--parts", "1", "--out", str(idx)])
        main(["check", "--test-file", str(test_file), "--lsh-dir", str(idx),
              "--threshold", t, "--out", str(tmp_path / f"r{t}.txt")])
    code = main(["merge", "--in", str(tmp_path / "r0.5.txt"), str(tmp_path / "r0.7.txt"),
                 "--out", str(tmp_path / "m.txt")])
    assert code == EXIT_DATA
