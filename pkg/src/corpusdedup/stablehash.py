"""Seedable 64-bit hashing that is byte-identical on every platform.

Keyed blake2b truncated to 8 bytes backs shingle hashes, band keys, config
fingerprints and the train/val split assignment, so indexes and shards built
on one machine query identically on another.
"""

from hashlib import blake2b

__all__ = ["hash64", "fingerprint64"]


def hash64(data: bytes, seed: int = 0) -> int:
    """Hash bytes to an unsigned 64-bit integer under the given seed."""
    key = (seed & 0xFFFFFFFFFFFFFFFF).to_bytes(8, "little")
    return int.from_bytes(blake2b(data, digest_size=8, key=key).digest(), "little")


def fingerprint64(*parts: object) -> int:
    """Order-sensitive 64-bit fingerprint of a tuple of printable values."""
    canon = "\x1f".join(str(p) for p in parts).encode("utf-8")
    return hash64(canon, seed=0x5F1A6C3D)
