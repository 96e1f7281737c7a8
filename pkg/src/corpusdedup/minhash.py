"""MinHash signatures over shingle sets and Jaccard estimation.

Each of the k "permutations" is a universal hash x -> (a*x + b) mod p over
the Mersenne prime p = 2^61 - 1; the signature keeps the minimum per
permutation. The fraction of agreeing positions between two signatures is an
unbiased estimator of the Jaccard similarity of the underlying sets.

Parameters (a_i, b_i) derive deterministically from (k, seed) via splitmix64:
draw z_{2i}, z_{2i+1} from the splitmix64 stream seeded with `seed`; then
a_i = z_{2i} mod (p-1) + 1, lowered by one if even (odd, nonzero, < p), and
b_i = z_{2i+1} mod p. Signatures are therefore identical across platforms,
runs and thread counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidK, KMismatch
from .shingle import ShingleSet

__all__ = [
    "MERSENNE_P61",
    "SENTINEL",
    "MinHasher",
    "MinHashSignature",
    "make_hasher",
    "signature",
    "estimate_jaccard",
    "exact_jaccard",
]

MERSENNE_P61 = (1 << 61) - 1
# Empty shingle sets hash to the all-sentinel vector; 2^64-1 exceeds any
# (a*x+b) mod p value, so a sentinel never equals a real signature slot.
SENTINEL = (1 << 64) - 1

_M64 = (1 << 64) - 1
_MASK31 = np.uint64((1 << 31) - 1)
_MASK30 = np.uint64((1 << 30) - 1)
_P = np.uint64(MERSENNE_P61)


def _splitmix64(seed: int, count: int) -> list[int]:
    """The documented parameter generator: splitmix64 output stream."""
    out = []
    state = seed & _M64
    for _ in range(count):
        state = (state + 0x9E3779B97F4A7C15) & _M64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
        out.append(z ^ (z >> 31))
    return out


def _mod_p61(x: np.ndarray) -> np.ndarray:
    """Reduce uint64 values (< 2^64) mod 2^61-1."""
    x = (x >> np.uint64(61)) + (x & _P)
    return np.where(x >= _P, x - _P, x)


def _mulmod_p61(a: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Exact (a*x) mod 2^61-1 for operands < 2^61, in uint64 arithmetic.

    Splits both operands into 31-bit limbs; all partial sums stay below 2^64.
    """
    au, ad = a >> np.uint64(31), a & _MASK31
    xu, xd = x >> np.uint64(31), x & _MASK31
    mid = ad * xu + au * xd
    t = au * xu * np.uint64(2) + (mid >> np.uint64(30)) + ((mid & _MASK30) << np.uint64(31)) + ad * xd
    return _mod_p61(t)


@dataclass(frozen=True)
class MinHasher:
    """k universal-hash permutations fully determined by (k, seed)."""

    k: int
    seed: int
    a: np.ndarray = field(repr=False, compare=False)
    b: np.ndarray = field(repr=False, compare=False)


@dataclass(frozen=True)
class MinHashSignature:
    """Per-permutation minima; length k, all-SENTINEL for empty sets."""

    mins: np.ndarray
    k: int

    def is_sentinel(self) -> bool:
        return bool(self.mins[0] == np.uint64(SENTINEL))


def make_hasher(k: int, seed: int) -> MinHasher:
    """Derive the k (a, b) parameter pairs from the seed. Deterministic."""
    if k < 1:
        raise InvalidK(f"permutation count must be >= 1, got {k}")
    draws = _splitmix64(seed, 2 * k)
    a = np.empty(k, dtype=np.uint64)
    b = np.empty(k, dtype=np.uint64)
    for i in range(k):
        ai = draws[2 * i] % (MERSENNE_P61 - 1) + 1
        if ai % 2 == 0:
            ai -= 1
        a[i] = ai
        b[i] = draws[2 * i + 1] % MERSENNE_P61
    a.flags.writeable = False
    b.flags.writeable = False
    return MinHasher(k=k, seed=seed, a=a, b=b)


def signature(hasher: MinHasher, shingles: ShingleSet, _chunk: int = 8192) -> MinHashSignature:
    """mins[i] = min over x in shingles of (a_i*x + b_i) mod p."""
    if not shingles:
        mins = np.full(hasher.k, SENTINEL, dtype=np.uint64)
        mins.flags.writeable = False
        return MinHashSignature(mins=mins, k=hasher.k)
    xs = _mod_p61(np.fromiter(shingles, dtype=np.uint64, count=len(shingles)))
    a = hasher.a[:, None]
    b = hasher.b[:, None]
    mins = np.full(hasher.k, MERSENNE_P61, dtype=np.uint64)
    for lo in range(0, xs.size, _chunk):
        block = xs[None, lo : lo + _chunk]
        vals = _mod_p61(_mulmod_p61(a, block) + b)
        np.minimum(mins, vals.min(axis=1), out=mins)
    mins.flags.writeable = False
    return MinHashSignature(mins=mins, k=hasher.k)


def estimate_jaccard(sig_a: MinHashSignature, sig_b: MinHashSignature) -> float:
    """Fraction of agreeing signature positions."""
    if sig_a.k != sig_b.k:
        raise KMismatch(f"signature lengths differ: {sig_a.k} != {sig_b.k}")
    return float(np.count_nonzero(sig_a.mins == sig_b.mins)) / sig_a.k


def exact_jaccard(set_a: ShingleSet, set_b: ShingleSet) -> float:
    """|A n B| / |A u B|, with the empty/empty pair defined as 1.0."""
    if not set_a and not set_b:
        return 1.0
    return len(set_a & set_b) / len(set_a | set_b)
