"""Exception types raised across the toolkit.

Exit-code mapping used by the CLI: DataError subclasses map to exit code 3,
IoFailure to 4, bad flags to 2.
"""


class CorpusDedupError(Exception):
    """Base class for all toolkit errors."""


class DataError(CorpusDedupError):
    """A data or format problem in an input (exit code 3)."""


class IoFailure(CorpusDedupError):
    """An operating-system level read/write failure (exit code 4)."""


# corpus ingestion
class UnbalancedBraces(DataError):
    """Brace nesting in a Java file never closes; the whole file is discarded."""


class NotUtf8(DataError):
    """Input bytes are not valid UTF-8."""


class MalformedRecord(DataError):
    """A thread interchange record is missing its id or title."""


class UnknownId(DataError):
    """A document id is not present in the corpus store."""


# tokenization and shards
class VocabMissingSymbol(DataError):
    """The vocab/merges files are internally inconsistent."""


class UnknownTokenId(DataError):
    """A token id is outside the vocabulary."""


class TokenIdOverflow(DataError):
    """A token id does not fit the unsigned 16-bit shard format."""


# minhash / lsh
class InvalidK(DataError):
    """Permutation count must be at least 1."""


class KMismatch(DataError):
    """Two signatures were built with different permutation counts."""


class InvalidThreshold(DataError):
    """Similarity threshold must lie strictly inside (0, 1)."""


class DuplicateId(DataError):
    """The same document id was inserted twice into one index shard."""


class HasherMismatch(DataError):
    """Query signature does not match the shard's hasher or shingle config."""


class FormatVersionMismatch(DataError):
    """An on-disk artifact has the wrong magic or format version."""


class ChecksumMismatch(DataError):
    """An on-disk artifact is truncated or corrupt."""


# dedup jobs
class ManifestMismatch(DataError):
    """Job parameters disagree with the index manifest."""


class MissingPart(DataError):
    """A shard file in the requested part range does not exist."""


class JobMismatch(DataError):
    """Reports from different jobs cannot be merged."""
