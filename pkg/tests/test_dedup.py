import random

import pytest

from corpusdedup.corpus import CorpusStore
from corpusdedup.dedup import (
    DedupJob,
    DedupReport,
    IndexManifest,
    build_corpus_indexes,
    dedup_testset,
    find_manifest,
    manifest_name,
    merge_reports,
    read_report,
    read_test_documents,
    removal_list,
    threshold_sweep,
)
from corpusdedup.errors import (
    InvalidThreshold,
    JobMismatch,
    ManifestMismatch,
    MissingPart,
)
from corpusdedup.minhash import exact_jaccard
from corpusdedup.shingle import ShingleConfig, shingle

from conftest import doc_of, partner_tokens, rand_tokens, synthetic_store, write_test_file


@pytest.fixture
def small_corpus(tmp_path):
    """Store of 200 random docs + 5 test docs with planted near-duplicates."""
    rng = random.Random(2718)
    store = synthetic_store(rng, 200, tokens_per_doc=60)
    config = ShingleConfig()
    test_docs = []
    planted = {}
    for ti in range(5):
        tokens = rand_tokens(rng, 60)
        test_docs.append(doc_of(tokens, doc_id=ti))
        ids = set()
        for _ in range(2):
            partner = partner_tokens(rng, tokens, rng.uniform(0.84, 0.95))
            doc = store.add(doc_of(partner))
            j = exact_jaccard(
                shingle(" ".join(tokens), config), shingle(" ".join(partner), config)
            )
            assert j >= 0.8
            ids.add(doc.id)
        planted[ti] = ids
    store_dir = tmp_path / "store"
    store.save(store_dir)
    test_file = write_test_file(tmp_path / "test.txt", test_docs)
    return store, store_dir, test_docs, test_file, planted


class TestBuildIndexes:
    def test_single_part(self, tmp_path):
        store = synthetic_store(random.Random(1), 10)
        paths = build_corpus_indexes(store, 0.7, 1, tmp_path, dataset="ten")
        assert len(paths) == 1
        from corpusdedup.lsh import load_shard

        shard = load_shard(paths[0])
        assert shard.doc_count == 10
        assert (shard.part_index, shard.part_count) == (0, 1)

    def test_ceiling_rule_part_sizes(self, tmp_path):
        store = synthetic_store(random.Random(2), 10)
        build_corpus_indexes(store, 0.7, 3, tmp_path, dataset="ten")
        manifest = IndexManifest.load(tmp_path / manifest_name("ten", 0.7))
        assert [p["docs"] for p in manifest.parts] == [4, 4, 2]

    def test_manifest_contents(self, tmp_path):
        store = synthetic_store(random.Random(3), 12)
        build_corpus_indexes(store, 0.6, 2, tmp_path, dataset="ds", k=64, seed=9)
        manifest = find_manifest(tmp_path, 0.6)
        assert manifest.dataset == "ds"
        assert manifest.k == 64 and manifest.seed == 9
        assert manifest.part_count == 2 and manifest.doc_count == 12
        assert manifest.plan.b * manifest.plan.r <= 64
        for part in range(2):
            assert manifest.path_for_part(tmp_path, part).exists()
            assert manifest.sig_path_for_part(tmp_path, part).exists()

    def test_file_naming(self, tmp_path):
        store = synthetic_store(random.Random(4), 4)
        build_corpus_indexes(store, 0.7, 2, tmp_path, dataset="jm")
        assert (tmp_path / "jm.t0.7.part0of2.lsh").exists()
        assert (tmp_path / "jm.t0.7.part1of2.lsh").exists()

    def test_find_manifest_missing_threshold(self, tmp_path):
        store = synthetic_store(random.Random(5), 4)
        build_corpus_indexes(store, 0.7, 1, tmp_path, dataset="jm")
        with pytest.raises(ManifestMismatch):
            find_manifest(tmp_path, 0.5)


class TestDedupTestset:
    def test_verbatim_test_set_matches_itself(self, tmp_path):
        rng = random.Random(10)
        store = synthetic_store(rng, 50)
        store_dir = tmp_path / "store"
        store.save(store_dir)
        idx = tmp_path / "idx"
        build_corpus_indexes(store, 0.7, 2, idx, dataset="d", store_path=str(store_dir))
        sample = [store.get(i) for i in (3, 11, 26, 40, 49)]
        test_file = write_test_file(tmp_path / "t.txt", sample)
        report = dedup_testset(
            DedupJob(test_source=str(test_file), index_dir=str(idx), threshold=0.7,
                     verification="exact")
        )
        merged = report.merged_entries()
        for doc in sample:
            assert doc.id in merged[doc.id]

    def test_zero_overlap_matches_nothing(self, tmp_path, small_corpus):
        store, store_dir, _, _, _ = small_corpus
        idx = tmp_path / "idx"
        build_corpus_indexes(store, 0.7, 1, idx, dataset="d", store_path=str(store_dir))
        rng = random.Random(5150)
        strangers = [doc_of(rand_tokens(rng, 40), doc_id=i) for i in range(4)]
        test_file = write_test_file(tmp_path / "s.txt", strangers)
        for verify in ("none", "signature", "exact"):
            report = dedup_testset(
                DedupJob(test_source=str(test_file), index_dir=str(idx),
                         threshold=0.7, verification=verify)
            )
            assert all(ids == frozenset() for ids in report.merged_entries().values())

    def test_exact_equals_brute_force(self, tmp_path, small_corpus):
        store, store_dir, test_docs, test_file, _ = small_corpus
        idx = tmp_path / "idx"
        build_corpus_indexes(store, 0.7, 3, idx, dataset="d", store_path=str(store_dir))
        report = dedup_testset(
            DedupJob(test_source=str(test_file), index_dir=str(idx), threshold=0.7,
                     verification="exact")
        )
        config = ShingleConfig()
        corpus_sets = {d.id: shingle(d.text, config) for d in store}
        got = {(t, c) for t, ids in report.merged_entries().items() for c in ids}
        want = set()
        for tdoc in test_docs:
            tset = shingle(tdoc.text, config)
            for cid, cset in corpus_sets.items():
                if exact_jaccard(tset, cset) >= 0.7:
                    want.add((tdoc.id, cid))
        assert got == want

    def test_every_test_id_appears_even_when_empty(self, tmp_path, small_corpus):
        store, store_dir, test_docs, test_file, _ = small_corpus
        idx = tmp_path / "idx"
        build_corpus_indexes(store, 0.7, 4, idx, dataset="d", store_path=str(store_dir))
        report = dedup_testset(
            DedupJob(test_source=str(test_file), index_dir=str(idx), threshold=0.7,
                     verification="exact")
        )
        # one row per (test id, part)
        assert len(report.rows) == len(test_docs) * 4
        assert set(report.merged_entries()) == {d.id for d in test_docs}

    def test_part_range_subset(self, tmp_path, small_corpus):
        store, store_dir, _, test_file, _ = small_corpus
        idx = tmp_path / "idx"
        build_corpus_indexes(store, 0.7, 5, idx, dataset="d", store_path=str(store_dir))
        full = dedup_testset(DedupJob(str(test_file), str(idx), 0.7, verification="signature"))
        lo = dedup_testset(DedupJob(str(test_file), str(idx), 0.7, partstart=0, partend=2,
                                    verification="signature"))
        hi = dedup_testset(DedupJob(str(test_file), str(idx), 0.7, partstart=2, partend=5,
                                    verification="signature"))
        merged = merge_reports([lo, hi])
        assert merged.serialize() == merge_reports([full]).serialize()

    def test_wrong_threshold_is_manifest_mismatch(self, tmp_path, small_corpus):
        store, store_dir, _, test_file, _ = small_corpus
        idx = tmp_path / "idx"
        build_corpus_indexes(store, 0.7, 1, idx, dataset="d")
        with pytest.raises(ManifestMismatch):
            dedup_testset(DedupJob(str(test_file), str(idx), 0.5))

    def test_bad_part_range(self, tmp_path, small_corpus):
        store, store_dir, _, test_file, _ = small_corpus
        idx = tmp_path / "idx"
        build_corpus_indexes(store, 0.7, 2, idx, dataset="d")
        with pytest.raises(ManifestMismatch):
            dedup_testset(DedupJob(str(test_file), str(idx), 0.7, partstart=1, partend=5))

    def test_missing_part_file(self, tmp_path, small_corpus):
        store, store_dir, _, test_file, _ = small_corpus
        idx = tmp_path / "idx"
        build_corpus_indexes(store, 0.7, 2, idx, dataset="d")
        (idx / "d.t0.7.part1of2.lsh").unlink()
        with pytest.raises(MissingPart):
            dedup_testset(DedupJob(str(test_file), str(idx), 0.7, verification="none"))

    def test_exact_needs_store(self, tmp_path, small_corpus):
        store, _, _, test_file, _ = small_corpus
        idx = tmp_path / "idx"
        build_corpus_indexes(store, 0.7, 1, idx, dataset="d")  # no store recorded
        with pytest.raises(ManifestMismatch):
            dedup_testset(DedupJob(str(test_file), str(idx), 0.7, verification="exact"))

    def test_raw_test_files(self, tmp_path, small_corpus):
        store, store_dir, _, _, _ = small_corpus
        idx = tmp_path / "idx"
        build_corpus_indexes(store, 0.7, 1, idx, dataset="d", store_path=str(store_dir))
        raw_dir = tmp_path / "raw"
        raw_dir.mkdir()
        (raw_dir / "a.txt").write_text(store.get(7).text)
        (raw_dir / "b.txt").write_text("completely different text entirely")
        report = dedup_testset(
            DedupJob(str(raw_dir), str(idx), 0.7, verification="exact", raw=True)
        )
        merged = report.merged_entries()
        assert 7 in merged[0]
        assert merged[1] == frozenset()

    def test_output_file_deterministic(self, tmp_path, small_corpus):
        store, store_dir, _, test_file, _ = small_corpus
        idx = tmp_path / "idx"
        build_corpus_indexes(store, 0.7, 2, idx, dataset="d", store_path=str(store_dir))
        job = DedupJob(str(test_file), str(idx), 0.7, verification="exact",
                       out_path=str(tmp_path / "r1.txt"))
        dedup_testset(job)
        job2 = DedupJob(str(test_file), str(idx), 0.7, verification="exact",
                        out_path=str(tmp_path / "r2.txt"))
        dedup_testset(job2)
        assert (tmp_path / "r1.txt").read_bytes() == (tmp_path / "r2.txt").read_bytes()


class TestReportsAndMerge:
    def _report(self, rows, parts="0..1", **overrides):
        base = dict(dataset="d", threshold=0.7, verify="exact", k=256, seed=42,
                    shingle_fingerprint=0xAB, parts_label=parts)
        base.update(overrides)
        return DedupReport(rows=rows, **base)

    def test_merge_single_is_identity(self):
        rep = self._report([(7, frozenset({1})), (9, frozenset())])
        merged = merge_reports([rep])
        assert merged.merged_entries() == {7: {1}, 9: set()}
        assert merge_reports([merged]).merged_entries() == merged.merged_entries()

    def test_merge_unions_disjoint_parts(self):
        a = self._report([(7, frozenset({1}))], parts="0..1")
        b = self._report([(7, frozenset({2}))], parts="1..2")
        assert merge_reports([a, b]).merged_entries() == {7: {1, 2}}

    def test_merge_order_independent(self):
        a = self._report([(7, frozenset({1})), (8, frozenset({5}))])
        b = self._report([(7, frozenset({2}))], parts="1..2")
        assert merge_reports([a, b]).serialize() == merge_reports([b, a]).serialize()

    def test_merge_rejects_different_jobs(self):
        a = self._report([])
        b = self._report([], threshold=0.8)
        with pytest.raises(JobMismatch):
            merge_reports([a, b])
        c = self._report([], seed=43)
        with pytest.raises(JobMismatch):
            merge_reports([a, c])

    def test_report_file_round_trip(self, tmp_path):
        rep = self._report([(17, frozenset({3, 905})), (9, frozenset())])
        path = tmp_path / "r.txt"
        rep.write(path)
        text = path.read_text()
        assert "17\t{3, 905}" in text
        assert "9\t{}" in text
        back = read_report(path)
        assert back.job_identity() == rep.job_identity()
        assert back.rows == rep.rows

    def test_removal_list(self):
        assert removal_list(self._report([])) == []
        rep = self._report([(7, frozenset({1})), (9, frozenset())])
        assert removal_list(rep) == [7]
        rep2 = self._report([(9, frozenset({2})), (7, frozenset({1}))])
        assert removal_list(rep2) == [7, 9]


class TestThresholdSweep:
    def test_forced_counts(self):
        # every test doc's best match sits near J=0.7: present at 0.5, absent at 0.9
        rng = random.Random(314)
        store = CorpusStore()
        test_docs = []
        config = ShingleConfig()
        for i in range(6):
            tokens = rand_tokens(rng, 60)
            test_docs.append(doc_of(tokens, doc_id=i))
            partner = partner_tokens(rng, tokens, 0.7)
            store.add(doc_of(partner))
            j = exact_jaccard(shingle(" ".join(tokens), config),
                              shingle(" ".join(partner), config))
            assert 0.6 < j < 0.8
        for _ in range(50):
            store.add(doc_of(rand_tokens(rng, 60)))
        sweep = threshold_sweep(test_docs, store, [0.5, 0.9])
        assert sweep.counts == [6, 0]
        assert sweep.verify == "exact"
        assert sweep.candidate_threshold == 0.5

    def test_counts_nonincreasing(self):
        rng = random.Random(577)
        store = synthetic_store(rng, 80)
        test_docs = []
        for i in range(8):
            tokens = rand_tokens(rng, 60)
            test_docs.append(doc_of(tokens, doc_id=i))
            store.add(doc_of(partner_tokens(rng, tokens, rng.uniform(0.4, 0.95))))
        sweep = threshold_sweep(test_docs, store, [0.3, 0.5, 0.7, 0.9])
        assert all(b <= a for a, b in zip(sweep.counts, sweep.counts[1:]))

    def test_threshold_validation(self):
        store = synthetic_store(random.Random(1), 5)
        with pytest.raises(InvalidThreshold):
            threshold_sweep([], store, [])
        with pytest.raises(InvalidThreshold):
            threshold_sweep([], store, [0.7, 0.5])
        with pytest.raises(InvalidThreshold):
            threshold_sweep([], store, [0.0, 0.5])


def test_read_test_documents_store_framing(tmp_path):
    docs = [doc_of(["alpha", "beta", "gamma"], doc_id=5)]
    path = write_test_file(tmp_path / "t.txt", docs)
    back = read_test_documents(path)
    assert len(back) == 1
    assert back[0].id == 5
    assert back[0].text == "alpha beta gamma"
