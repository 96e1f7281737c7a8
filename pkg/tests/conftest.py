"""Shared fixtures: the test vocab and synthetic token-document corpora."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from corpusdedup.bpe import BpeVocab
from corpusdedup.corpus import CorpusStore, DocKind, Document, Provenance

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def vocab() -> BpeVocab:
    return BpeVocab.from_dir(FIXTURES / "vocab")


@pytest.fixture(scope="session")
def java_corpus_dir() -> Path:
    return FIXTURES / "java_corpus"


def rand_tokens(rng: random.Random, count: int) -> list:
    """Distinct-looking random tokens; collisions are negligible."""
    return [f"w{rng.getrandbits(48):012x}" for _ in range(count)]


def doc_of(tokens, doc_id: int = 0) -> Document:
    return Document(
        id=doc_id,
        kind=DocKind.JAVA_METHOD,
        text=" ".join(tokens),
        provenance=Provenance(project="syn", file_path="syn.java", start_line=1, end_line=1),
    )


def partner_tokens(rng: random.Random, tokens: list, target_jaccard: float) -> list:
    """Tokens sharing a prefix with `tokens` so the 3-gram shingle sets of the
    two texts have Jaccard close to target (realized J = a/(2n-a) snaps to a
    grid; callers verify the realized value)."""
    n = len(tokens) - 2
    a = round(2 * n * target_jaccard / (1 + target_jaccard))
    shared_len = a + 2
    return tokens[:shared_len] + rand_tokens(rng, len(tokens) - shared_len)


def synthetic_store(rng: random.Random, n_docs: int, tokens_per_doc: int = 80) -> CorpusStore:
    store = CorpusStore()
    for _ in range(n_docs):
        store.add(doc_of(rand_tokens(rng, tokens_per_doc)))
    return store


def write_test_file(path: Path, docs) -> Path:
    """Write documents in the corpus-store record framing."""
    import base64

    with open(path, "w", encoding="utf-8") as fh:
        for doc in docs:
            b64 = base64.b64encode(doc.text.encode("utf-8")).decode("ascii")
            p = doc.provenance
            fh.write(
                f"{doc.id}\t{doc.kind.value}\t{b64}\t{p.project}\t{p.file_path}"
                f"\t{p.start_line}\t{p.end_line}\n"
            )
    return path
