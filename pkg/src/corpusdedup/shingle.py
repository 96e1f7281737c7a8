"""Turn document text into a set of hashed token n-grams (shingles).

Documents are compared as shingle sets throughout the toolkit: MinHash
signatures sketch these sets and exact Jaccard verification recomputes them.
Tokens are maximal runs of non-whitespace, so reformatting a method does not
change its shingles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .stablehash import fingerprint64, hash64

__all__ = ["ShingleConfig", "ShingleSet", "shingle"]

# A shingle set is just the set of 64-bit n-gram hashes.
ShingleSet = frozenset

_SEPARATOR = " "


@dataclass(frozen=True)
class ShingleConfig:
    """How text becomes shingles: token n-grams of width n, 64-bit hashed."""

    unit: str = "word_token"
    n: int = 3
    lowercase: bool = False
    hash_bits: int = 64
    seed: int = 0

    def __post_init__(self) -> None:
        if self.unit != "word_token":
            raise ValueError(f"unsupported shingle unit: {self.unit!r}")
        if self.n < 1:
            raise ValueError("shingle width n must be >= 1")
        if self.hash_bits != 64:
            raise ValueError("only 64-bit shingle hashes are supported")

    def fingerprint(self) -> int:
        """Stable identity of this config, stored in shard files."""
        return fingerprint64(
            "shingle", self.unit, self.n, int(self.lowercase), self.hash_bits, self.seed
        )


def shingle(text: str, config: ShingleConfig = ShingleConfig()) -> ShingleSet:
    """Hash every consecutive n-gram of whitespace-delimited tokens.

    Texts with fewer than n tokens produce the empty set; duplicate n-grams
    collapse because the result is a set.
    """
    if config.lowercase:
        text = text.lower()
    tokens = text.split()
    n = config.n
    if len(tokens) < n:
        return ShingleSet()
    seed = config.seed
    sep = _SEPARATOR
    return ShingleSet(
        hash64(sep.join(tokens[i : i + n]).encode("utf-8"), seed)
        for i in range(len(tokens) - n + 1)
    )
