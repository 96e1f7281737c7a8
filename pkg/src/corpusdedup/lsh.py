"""Banded LSH indexing of MinHash signatures.

A signature of length k is split into b bands of r rows; a document lands in
one bucket per band, keyed by a 64-bit digest of the band's r slots plus the
band index (so bands never share buckets in the flat map). Two documents with
Jaccard similarity s collide in at least one band with probability
P(s) = 1 - (1 - s^r)^b, the banding S-curve.

Shard files are one self-contained index over one contiguous part of a corpus
at one threshold: magic, format version, hasher metadata, band plan, part
info, per-bucket sorted id runs (delta + varint encoded), and a whole-file
checksum. A truncated or corrupt file never yields a partial shard.
"""

from __future__ import annotations

import struct
import zlib
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import (
    ChecksumMismatch,
    DuplicateId,
    FormatVersionMismatch,
    HasherMismatch,
    InvalidThreshold,
    IoFailure,
)
from .minhash import SENTINEL, MinHasher, MinHashSignature
from .stablehash import hash64

__all__ = [
    "BandPlan",
    "LshIndexShard",
    "CandidateSet",
    "optimal_bands",
    "candidate_probability",
    "band_keys",
    "build_shard",
    "query",
    "save_shard",
    "load_shard",
    "save_signatures",
    "load_signatures",
]

_SHARD_MAGIC = b"CDLSHARD"
_SHARD_VERSION = 1
_SIG_MAGIC = b"CDSIGSET"
_SIG_VERSION = 1
_INTEGRATION_STEP = 0.001
_BAND_KEY_SEED = 0x1B5D


@dataclass(frozen=True)
class BandPlan:
    """b bands of r rows realizing a target similarity threshold."""

    b: int
    r: int
    threshold: float

    def __post_init__(self) -> None:
        if self.b < 1 or self.r < 1:
            raise ValueError("band plan needs b >= 1 and r >= 1")
        if not 0.0 < self.threshold < 1.0:
            raise InvalidThreshold(f"threshold must be in (0,1), got {self.threshold}")


@dataclass(frozen=True)
class CandidateSet:
    """Ids of stored documents colliding with a query in any band."""

    ids: frozenset


@dataclass
class LshIndexShard:
    """Banded bucket index over one part of a corpus."""

    plan: BandPlan
    k: int
    seed: int
    shingle_fingerprint: int
    part_index: int
    part_count: int
    doc_count: int = 0
    # flat map: band-salted 64-bit key -> ascending doc ids
    buckets: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.part_index < self.part_count:
            raise ValueError("part_index must be < part_count")
        if self.plan.b * self.plan.r > self.k:
            raise ValueError("band plan does not fit signature length k")


def candidate_probability(s: float, plan: BandPlan) -> float:
    """S-curve: probability that a pair at Jaccard s collides in >= 1 band."""
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"similarity must be in [0,1], got {s}")
    return 1.0 - (1.0 - s**plan.r) ** plan.b


def _plan_cost(b: int, r: int, threshold: float) -> float:
    """Equal-weight sum of false-positive and false-negative areas.

    FP area integrates P(s) below the threshold, FN area integrates 1-P(s)
    above it; both via the trapezoid rule at step ~0.001.
    """
    lo = np.linspace(0.0, threshold, max(2, int(round(threshold / _INTEGRATION_STEP)) + 1))
    hi = np.linspace(threshold, 1.0, max(2, int(round((1.0 - threshold) / _INTEGRATION_STEP)) + 1))
    p_lo = 1.0 - (1.0 - lo**r) ** b
    p_hi = 1.0 - (1.0 - hi**r) ** b
    fp = float(np.trapezoid(p_lo, lo))
    fn = float(np.trapezoid(1.0 - p_hi, hi))
    return fp + fn


@lru_cache(maxsize=256)
def optimal_bands(threshold: float, k: int) -> BandPlan:
    """Pick (b, r) with b*r <= k minimizing the FP+FN integral cost.

    Ties break toward smaller r, then smaller b, so the choice is
    deterministic for every (threshold, k).
    """
    if not 0.0 < threshold < 1.0:
        raise InvalidThreshold(f"threshold must be in (0,1), got {threshold}")
    if k < 2:
        raise ValueError("need k >= 2 to band")
    best = None
    for r in range(1, k + 1):
        for b in range(1, k // r + 1):
            cost = _plan_cost(b, r, threshold)
            key = (cost, r, b)
            if best is None or key < best[0]:
                best = (key, BandPlan(b=b, r=r, threshold=threshold))
    return best[1]


def band_keys(sig: MinHashSignature, plan: BandPlan) -> list:
    """64-bit digests of each band's r slots, salted with the band index."""
    mins = np.ascontiguousarray(sig.mins, dtype="<u8")
    keys = []
    for i in range(plan.b):
        seg = mins[i * plan.r : (i + 1) * plan.r]
        keys.append(hash64(struct.pack("<I", i) + seg.tobytes(), seed=_BAND_KEY_SEED))
    return keys


def build_shard(
    docs,
    hasher: MinHasher,
    plan: BandPlan,
    part: tuple = (0, 1),
    shingle_fingerprint: int = 0,
) -> LshIndexShard:
    """Index an iterator of (id, MinHashSignature) pairs into one shard.

    Sentinel (empty-set) signatures are skipped entirely: they land in no
    bucket and never match. Ids must be unique within the part.
    """
    shard = LshIndexShard(
        plan=plan,
        k=hasher.k,
        seed=hasher.seed,
        shingle_fingerprint=shingle_fingerprint,
        part_index=part[0],
        part_count=part[1],
    )
    seen = set()
    buckets = shard.buckets
    for doc_id, sig in docs:
        if doc_id in seen:
            raise DuplicateId(f"document id {doc_id} inserted twice in part {part[0]}")
        seen.add(doc_id)
        if sig.is_sentinel():
            continue
        for key in band_keys(sig, plan):
            buckets.setdefault(key, []).append(doc_id)
        shard.doc_count += 1
    for ids in buckets.values():
        ids.sort()
    return shard


def query(shard: LshIndexShard, sig: MinHashSignature) -> CandidateSet:
    """Union of bucket members sharing any band key with the query."""
    if sig.k != shard.k:
        raise HasherMismatch(f"signature k={sig.k} but shard was built with k={shard.k}")
    if sig.is_sentinel():
        return CandidateSet(ids=frozenset())
    out = set()
    for key in band_keys(sig, shard.plan):
        hit = shard.buckets.get(key)
        if hit:
            out.update(hit)
    return CandidateSet(ids=frozenset(out))


def _check_compatible(shard: LshIndexShard, k: int, seed: int, shingle_fp: int) -> None:
    if (shard.k, shard.seed, shard.shingle_fingerprint) != (k, seed, shingle_fp):
        raise HasherMismatch(
            "shard hasher metadata "
            f"(k={shard.k}, seed={shard.seed}, shingle_fp={shard.shingle_fingerprint:#x}) "
            f"does not match (k={k}, seed={seed}, shingle_fp={shingle_fp:#x})"
        )


def _write_varint(out: bytearray, value: int) -> None:
    while True:
        byte = value & 0x7F
        value >>= 7
        if value:
            out.append(byte | 0x80)
        else:
            out.append(byte)
            return


def _read_varint(buf: memoryview, pos: int) -> tuple:
    result = 0
    shift = 0
    while True:
        if pos >= len(buf):
            raise ChecksumMismatch("shard file ends inside a varint")
        byte = buf[pos]
        pos += 1
        result |= (byte & 0x7F) << shift
        if not byte & 0x80:
            return result, pos
        shift += 7


def save_shard(shard: LshIndexShard, path) -> None:
    """Serialize a shard; layout documented in the module docstring."""
    out = bytearray()
    out += _SHARD_MAGIC
    out += struct.pack("<I", _SHARD_VERSION)
    out += struct.pack(
        "<IQQIIdIIQ",
        shard.k,
        shard.seed & 0xFFFFFFFFFFFFFFFF,
        shard.shingle_fingerprint,
        shard.plan.b,
        shard.plan.r,
        shard.plan.threshold,
        shard.part_index,
        shard.part_count,
        shard.doc_count,
    )
    out += struct.pack("<Q", len(shard.buckets))
    for key in sorted(shard.buckets):
        ids = shard.buckets[key]
        out += struct.pack("<Q", key)
        _write_varint(out, len(ids))
        prev = 0
        for i in ids:
            _write_varint(out, i - prev)
            prev = i
    out += struct.pack("<I", zlib.crc32(bytes(out)) & 0xFFFFFFFF)
    try:
        with open(path, "wb") as fh:
            fh.write(out)
    except OSError as exc:
        raise IoFailure(f"cannot write shard {path}: {exc}") from exc


def load_shard(path) -> LshIndexShard:
    """Load a shard, verifying the whole-file checksum before parsing."""
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise IoFailure(f"cannot read shard {path}: {exc}") from exc
    if len(data) < len(_SHARD_MAGIC) + 8:
        raise ChecksumMismatch(f"shard file {path} is truncated")
    body, (crc,) = data[:-4], struct.unpack("<I", data[-4:])
    if zlib.crc32(body) & 0xFFFFFFFF != crc:
        raise ChecksumMismatch(f"shard file {path} fails its checksum")
    if body[: len(_SHARD_MAGIC)] != _SHARD_MAGIC:
        raise FormatVersionMismatch(f"{path} is not a shard file")
    pos = len(_SHARD_MAGIC)
    (version,) = struct.unpack_from("<I", body, pos)
    pos += 4
    if version != _SHARD_VERSION:
        raise FormatVersionMismatch(f"shard version {version} unsupported")
    k, seed, fp, b, r, threshold, part_index, part_count, doc_count = struct.unpack_from(
        "<IQQIIdIIQ", body, pos
    )
    pos += struct.calcsize("<IQQIIdIIQ")
    (n_buckets,) = struct.unpack_from("<Q", body, pos)
    pos += 8
    shard = LshIndexShard(
        plan=BandPlan(b=b, r=r, threshold=threshold),
        k=k,
        seed=seed,
        shingle_fingerprint=fp,
        part_index=part_index,
        part_count=part_count,
        doc_count=doc_count,
    )
    view = memoryview(body)
    for _ in range(n_buckets):
        if pos + 8 > len(body):
            raise ChecksumMismatch(f"shard file {path} ends inside a bucket header")
        (key,) = struct.unpack_from("<Q", body, pos)
        pos += 8
        count, pos = _read_varint(view, pos)
        ids = []
        prev = 0
        for _ in range(count):
            delta, pos = _read_varint(view, pos)
            prev += delta
            ids.append(prev)
        shard.buckets[key] = ids
    return shard


def save_signatures(sigs, k: int, seed: int, shingle_fp: int, path) -> None:
    """Sidecar of raw signatures for verification modes that need them.

    `sigs` is an iterable of (id, MinHashSignature); ids are stored ascending.
    """
    entries = sorted(sigs, key=lambda pair: pair[0])
    out = bytearray()
    out += _SIG_MAGIC
    out += struct.pack("<I", _SIG_VERSION)
    out += struct.pack("<IQQQ", k, seed & 0xFFFFFFFFFFFFFFFF, shingle_fp, len(entries))
    for doc_id, sig in entries:
        out += struct.pack("<Q", doc_id)
        out += np.ascontiguousarray(sig.mins, dtype="<u8").tobytes()
    out += struct.pack("<I", zlib.crc32(bytes(out)) & 0xFFFFFFFF)
    try:
        with open(path, "wb") as fh:
            fh.write(out)
    except OSError as exc:
        raise IoFailure(f"cannot write signature sidecar {path}: {exc}") from exc


def load_signatures(path, k: int, seed: int, shingle_fp: int) -> dict:
    """Load a signature sidecar into an id -> MinHashSignature map."""
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise IoFailure(f"cannot read signature sidecar {path}: {exc}") from exc
    if len(data) < len(_SIG_MAGIC) + 8:
        raise ChecksumMismatch(f"sidecar {path} is truncated")
    body, (crc,) = data[:-4], struct.unpack("<I", data[-4:])
    if zlib.crc32(body) & 0xFFFFFFFF != crc:
        raise ChecksumMismatch(f"sidecar {path} fails its checksum")
    if body[: len(_SIG_MAGIC)] != _SIG_MAGIC:
        raise FormatVersionMismatch(f"{path} is not a signature sidecar")
    pos = len(_SIG_MAGIC)
    (version,) = struct.unpack_from("<I", body, pos)
    pos += 4
    if version != _SIG_VERSION:
        raise FormatVersionMismatch(f"sidecar version {version} unsupported")
    file_k, file_seed, file_fp, count = struct.unpack_from("<IQQQ", body, pos)
    pos += struct.calcsize("<IQQQ")
    if (file_k, file_seed, file_fp) != (k, seed, shingle_fp):
        raise HasherMismatch(f"sidecar {path} was built with different hasher metadata")
    sigs = {}
    row = 8 + 8 * file_k
    for _ in range(count):
        if pos + row > len(body):
            raise ChecksumMismatch(f"sidecar {path} ends inside a record")
        (doc_id,) = struct.unpack_from("<Q", body, pos)
        mins = np.frombuffer(body, dtype="<u8", count=file_k, offset=pos + 8).astype(np.uint64)
        mins.flags.writeable = False
        sigs[doc_id] = MinHashSignature(mins=mins, k=file_k)
        pos += row
    return sigs
