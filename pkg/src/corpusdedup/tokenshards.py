"""Binary training shards: little-endian u16 token streams with exclusion.

`train.bin` and `val.bin` are headerless streams of unsigned 16-bit token
ids; each document's encoding is followed by the end-of-text id. Documents in
the exclusion set never appear. The validation assignment hashes the document
id under a fixed seed, so it is reproducible and independent of stream order.
A text manifest records token counts, seed, split and the vocab fingerprint.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .bpe import BpeVocab, bpe_encode
from .errors import IoFailure, TokenIdOverflow, VocabMissingSymbol
from .stablehash import hash64

__all__ = ["ShardManifest", "CorpusStats", "write_token_shards", "corpus_stats", "val_fraction"]

_DEFAULT_SEED = 1337
_BUFFER_TOKENS = 1 << 16


@dataclass
class ShardManifest:
    seed: int
    split: float
    vocab_fingerprint: int
    files: dict = field(default_factory=dict)  # name -> {"tokens": n, "docs": m}

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("format=corpusdedup-shards-v1\n")
            fh.write(f"seed={self.seed}\n")
            fh.write(f"split={self.split:g}\n")
            fh.write(f"vocab={self.vocab_fingerprint:016x}\n")
            for name in sorted(self.files):
                entry = self.files[name]
                fh.write(f"file={name} tokens={entry['tokens']} docs={entry['docs']}\n")

    @classmethod
    def load(cls, path) -> "ShardManifest":
        manifest = cls(seed=0, split=0.0, vocab_fingerprint=0)
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                key, _, value = line.strip().partition("=")
                if key == "seed":
                    manifest.seed = int(value)
                elif key == "split":
                    manifest.split = float(value)
                elif key == "vocab":
                    manifest.vocab_fingerprint = int(value, 16)
                elif key == "file":
                    name, tokens, docs = value.split(" ")
                    manifest.files[name] = {
                        "tokens": int(tokens.split("=")[1]),
                        "docs": int(docs.split("=")[1]),
                    }
        return manifest


def val_fraction(doc_id: int, seed: int) -> float:
    """Deterministic uniform draw in [0,1) for the train/val assignment."""
    return hash64(doc_id.to_bytes(8, "little"), seed) / 2.0**64


class _ShardWriter:
    def __init__(self, path):
        try:
            self.fh = open(path, "wb")
        except OSError as exc:
            raise IoFailure(f"cannot open shard {path}: {exc}") from exc
        self.buffer: list = []
        self.tokens = 0
        self.docs = 0

    def add(self, ids: list) -> None:
        self.buffer.extend(ids)
        self.tokens += len(ids)
        self.docs += 1
        if len(self.buffer) >= _BUFFER_TOKENS:
            self.flush()

    def flush(self) -> None:
        if self.buffer:
            self.fh.write(np.asarray(self.buffer, dtype="<u2").tobytes())
            self.buffer = []

    def close(self) -> None:
        self.flush()
        self.fh.close()


def write_token_shards(
    docs,
    vocab: BpeVocab,
    exclusion=frozenset(),
    split: float = 0.0,
    out_dir=".",
    seed: int = _DEFAULT_SEED,
) -> ShardManifest:
    """Encode a document stream into train.bin/val.bin, skipping exclusions."""
    if not 0.0 <= split < 1.0:
        raise ValueError(f"validation split must be in [0,1), got {split}")
    if vocab.eot_id is None:
        raise VocabMissingSymbol("vocab has no <|endoftext|> token for document separation")
    exclusion = set(exclusion)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    eot = vocab.eot_id
    writers = {
        "train.bin": _ShardWriter(out_dir / "train.bin"),
        "val.bin": _ShardWriter(out_dir / "val.bin"),
    }
    try:
        for doc in docs:
            if doc.id in exclusion:
                continue
            ids = bpe_encode(doc.text, vocab)
            if ids and max(ids) >= 65536:
                raise TokenIdOverflow(
                    f"document {doc.id} encodes to id {max(ids)} >= 65536"
                )
            name = "val.bin" if val_fraction(doc.id, seed) < split else "train.bin"
            writers[name].add(ids + [eot])
        for writer in writers.values():
            writer.flush()
    except OSError as exc:
        raise IoFailure(f"cannot write shards under {out_dir}: {exc}") from exc
    finally:
        for writer in writers.values():
            writer.close()
    manifest = ShardManifest(seed=seed, split=split, vocab_fingerprint=vocab.fingerprint())
    for name, writer in writers.items():
        manifest.files[name] = {"tokens": writer.tokens, "docs": writer.docs}
    manifest.save(out_dir / "manifest.txt")
    return manifest


@dataclass
class CorpusStats:
    """Document/token totals and context-length coverage."""

    context_length: int
    document_count: int = 0
    token_count: int = 0
    covered_documents: int = 0

    @property
    def coverage(self) -> float:
        """Fraction of documents with <= context_length tokens (1.0 if empty)."""
        if self.document_count == 0:
            return 1.0
        return self.covered_documents / self.document_count

    def __add__(self, other: "CorpusStats") -> "CorpusStats":
        if self.context_length != other.context_length:
            raise ValueError("cannot merge stats at different context lengths")
        return CorpusStats(
            context_length=self.context_length,
            document_count=self.document_count + other.document_count,
            token_count=self.token_count + other.token_count,
            covered_documents=self.covered_documents + other.covered_documents,
        )


def corpus_stats(docs, vocab: BpeVocab, context_length: int = 256) -> CorpusStats:
    """Count documents, tokens, and coverage at the given context length."""
    if context_length < 1:
        raise ValueError("context length must be >= 1")
    stats = CorpusStats(context_length=context_length)
    for doc in docs:
        n = len(bpe_encode(doc.text, vocab))
        stats.document_count += 1
        stats.token_count += n
        if n <= context_length:
            stats.covered_documents += 1
    return stats
