import random

import pytest

from corpusdedup.corpus import (
    CorpusStore,
    DocKind,
    Document,
    Provenance,
    extract_holdout,
    ingest_java_tree,
    ingest_threads,
    read_holdout_ids,
    read_thread_records,
    trace,
)
from corpusdedup.errors import MalformedRecord, UnknownId

from conftest import doc_of, rand_tokens


def _store_with(texts):
    store = CorpusStore()
    for text in texts:
        store.add(
            Document(
                id=0,
                kind=DocKind.JAVA_METHOD,
                text=text,
                provenance=Provenance("p", "f.java", 1, 2),
            )
        )
    return store


class TestStore:
    def test_sequential_ids_from_zero(self):
        store = _store_with(["a b c", "d e f", "g h i"])
        assert [d.id for d in store] == [0, 1, 2]
        assert store.counts["java_method"] == 3

    def test_get_and_unknown_id(self):
        store = _store_with(["a"])
        assert store.get(0).text == "a"
        with pytest.raises(UnknownId):
            store.get(5)

    def test_two_ingestions_assign_identical_ids(self):
        texts = [" ".join(rand_tokens(random.Random(3), 5)) for _ in range(20)]
        a = _store_with(texts)
        b = _store_with(texts)
        assert [(d.id, d.text) for d in a] == [(d.id, d.text) for d in b]

    def test_save_load_round_trip(self, tmp_path):
        store = _store_with(["a b c", "tabs\tand\nnewlines", "unicode é 日本"])
        store.add(
            Document(
                id=0,
                kind=DocKind.DISCUSSION_THREAD,
                text="T\n\npost",
                provenance=Provenance("42", "", 0, 0),
            )
        )
        store.save(tmp_path / "store")
        back = CorpusStore.load(tmp_path / "store")
        assert len(back) == len(store)
        for mine, theirs in zip(store, back):
            assert mine == theirs
        meta = (tmp_path / "store" / "meta").read_text()
        assert "version=1" in meta
        assert "documents=4" in meta
        assert "java_method=3" in meta
        assert "discussion_thread=1" in meta

    def test_load_continues_id_sequence(self, tmp_path):
        store = _store_with(["a", "b"])
        store.save(tmp_path / "s")
        back = CorpusStore.load(tmp_path / "s")
        added = back.add(doc_of(["x", "y", "z"]))
        assert added.id == 2


class TestHoldout:
    def test_basic_split(self):
        store = _store_with(["a", "b", "c"])
        holdout, remainder = extract_holdout(store, {1})
        assert [d.id for d in holdout] == [1]
        assert remainder == {0, 2}
        assert len(store) == 3  # store unmodified

    def test_empty_holdout(self):
        store = _store_with(["a"])
        holdout, remainder = extract_holdout(store, set())
        assert holdout == [] and remainder == {0}

    def test_unknown_id(self):
        store = _store_with(["a"])
        with pytest.raises(UnknownId):
            extract_holdout(store, {0, 9})

    def test_holdout_in_id_order_and_disjoint(self):
        rng = random.Random(99)
        store = _store_with([f"t {i} x" for i in range(500)])
        ids = set(rng.sample(range(500), 123))
        holdout, remainder = extract_holdout(store, ids)
        assert [d.id for d in holdout] == sorted(ids)
        assert remainder.isdisjoint(ids)
        assert remainder | ids == store.ids()


class TestTrace:
    def test_echoes_ingestion(self, tmp_path):
        root = tmp_path / "p"
        (root / "src").mkdir(parents=True)
        (root / "src" / "A.java").write_text(
            "class A {\n  void f() {\n    g();\n  }\n}\n", encoding="utf-8"
        )
        store = CorpusStore()
        stats = ingest_java_tree(store, root, project="p")
        assert stats["methods"] == 1
        p = trace(store, 0)
        assert (p.project, p.file_path, p.start_line, p.end_line) == ("p", "src/A.java", 2, 4)

    def test_thread_provenance_shape(self):
        store = CorpusStore()
        for doc in ingest_threads([(42, "Title", ["a"])]):
            store.add(doc)
        p = trace(store, 0)
        assert p.file_path == "" and p.start_line == 0 and p.end_line == 0
        assert p.project == "42"

    def test_round_trip_over_ingestion_log(self, tmp_path):
        # every trace must match what the ingestion saw
        root = tmp_path / "proj"
        root.mkdir()
        expected = {}
        for i in range(20):
            name = f"F{i}.java"
            (root / name).write_text(
                f"class F{i} {{\n  int m{i}() {{ return {i}; }}\n}}\n", encoding="utf-8"
            )
            expected[i] = ("proj", name, 2, 2)
        store = CorpusStore()
        ingest_java_tree(store, root, project="proj")
        assert len(store) == 20
        for doc in store:
            p = trace(store, doc.id)
            want_file = doc.provenance.file_path
            assert (p.project, p.file_path, p.start_line, p.end_line) == (
                "proj",
                want_file,
                2,
                2,
            )


class TestIngestJavaTree:
    def test_corrupt_files_discarded_wholesale(self, tmp_path):
        root = tmp_path / "p"
        root.mkdir()
        (root / "Good.java").write_text("class G { void a() { x(); } void b() { y(); } }")
        (root / "Bad.java").write_text("class B { void fine() { x(); } void broken() { if (x) {")
        store = CorpusStore()
        stats = ingest_java_tree(store, root)
        assert stats["corrupt_files"] == 1
        assert stats["methods"] == 2
        assert all("Good" in d.provenance.file_path for d in store)

    def test_not_utf8_discarded(self, tmp_path):
        root = tmp_path / "p"
        root.mkdir()
        (root / "Bin.java").write_bytes(b"class A { \xff\xfe }")
        store = CorpusStore()
        stats = ingest_java_tree(store, root)
        assert stats["corrupt_files"] == 1 and len(store) == 0

    def test_include_doc_comments_flag(self, tmp_path):
        root = tmp_path / "p"
        root.mkdir()
        (root / "A.java").write_text(
            "class A {\n  /** Doc. */\n  void f() { g(); }\n}\n"
        )
        plain = CorpusStore()
        ingest_java_tree(plain, root)
        withdoc = CorpusStore()
        ingest_java_tree(withdoc, root, include_doc_comments=True)
        assert plain.get(0).text.startswith("void f()")
        assert withdoc.get(0).text.startswith("/** Doc. */\nvoid f()")


class TestThreads:
    def test_title_and_posts_joined_by_blank_lines(self):
        docs = ingest_threads([(1, "T", ["a", "b"])])
        assert docs[0].text == "T\n\na\n\nb"
        assert docs[0].kind == DocKind.DISCUSSION_THREAD

    def test_empty_posts(self):
        docs = ingest_threads([(2, "T", [])])
        assert docs[0].text == "T"

    def test_markup_stripped_by_default(self):
        docs = ingest_threads([(3, "Q", ["use <code>x</code> &amp; <b>y</b>"])])
        text = docs[0].text
        assert "x" in text and "&" in text and "y" in text
        assert "<" not in text and ">" not in text

    def test_markup_kept_with_flag(self):
        docs = ingest_threads([(3, "Q", ["<code>x</code>"])], strip_markup=False)
        assert "<code>x</code>" in docs[0].text

    def test_malformed_records_skipped_and_counted(self, caplog):
        records = [(1, "ok", ["p"]), (None, "no id", []), (2, None, [])]
        with caplog.at_level("WARNING"):
            docs = ingest_threads(records)
        assert len(docs) == 1
        assert sum("malformed" in r.message for r in caplog.records) == 2

    def test_ndjson_reader(self, tmp_path):
        path = tmp_path / "threads.ndjson"
        path.write_text(
            '{"thread_id": 1, "title": "T", "posts": ["a"]}\n'
            '{"title": "missing id", "posts": []}\n'
            "\n"
            '{"thread_id": 3, "title": "U", "posts": []}\n'
        )
        records = list(read_thread_records(path))
        assert len(records) == 3
        docs = ingest_threads(records)
        assert [d.provenance.project for d in docs] == ["1", "3"]

    def test_ndjson_bad_json(self, tmp_path):
        path = tmp_path / "bad.ndjson"
        path.write_text("{not json}\n")
        with pytest.raises(MalformedRecord):
            list(read_thread_records(path))


def test_read_holdout_ids(tmp_path):
    path = tmp_path / "ids.txt"
    path.write_text("3\n1\n\n2\n")
    assert read_holdout_ids(path) == {1, 2, 3}
