"""Near-duplicate indexing and dataset preparation for code corpora.

The pieces, bottom to top:

- corpus:      ingest Java trees / thread dumps into a document store with
               provenance, filtering and holdout extraction
- shingle:     token n-gram hashing (documents as shingle sets)
- minhash:     signatures and Jaccard estimation
- lsh:         banded bucket indexes, persisted as part-ranged shard files
- dedup:       index builds, test-set checks, report merge, threshold sweeps
- tokenshards: BPE token shards (train.bin/val.bin) with holdout exclusion
- bpe:         GPT-2 compatible byte-level BPE over published vocab files
- service:     HTTP API (and UI host) for online checking
- cli:         the `corpusdedup` command
"""

from .corpus import (
    CorpusStore,
    DocKind,
    Document,
    MethodRecord,
    Provenance,
    extract_holdout,
    extract_java_methods,
    filter_methods,
    ingest_java_tree,
    ingest_threads,
    trace,
)
from .bpe import BpeVocab, bpe_decode, bpe_encode
from .dedup import (
    DedupJob,
    DedupReport,
    IndexManifest,
    ThresholdSweep,
    build_corpus_indexes,
    dedup_testset,
    merge_reports,
    removal_list,
    threshold_sweep,
)
from .lsh import (
    BandPlan,
    CandidateSet,
    LshIndexShard,
    build_shard,
    candidate_probability,
    load_shard,
    optimal_bands,
    query,
    save_shard,
)
from .minhash import (
    MinHasher,
    MinHashSignature,
    estimate_jaccard,
    exact_jaccard,
    make_hasher,
    signature,
)
from .shingle import ShingleConfig, ShingleSet, shingle
from .tokenshards import CorpusStats, ShardManifest, corpus_stats, write_token_shards

__version__ = "0.1.0"

__all__ = [
    "BandPlan",
    "BpeVocab",
    "CandidateSet",
    "CorpusStats",
    "CorpusStore",
    "DedupJob",
    "DedupReport",
    "DocKind",
    "Document",
    "IndexManifest",
    "LshIndexShard",
    "MethodRecord",
    "MinHasher",
    "MinHashSignature",
    "Provenance",
    "ShardManifest",
    "ShingleConfig",
    "ShingleSet",
    "ThresholdSweep",
    "bpe_decode",
    "bpe_encode",
    "build_corpus_indexes",
    "build_shard",
    "candidate_probability",
    "corpus_stats",
    "dedup_testset",
    "estimate_jaccard",
    "exact_jaccard",
    "extract_holdout",
    "extract_java_methods",
    "filter_methods",
    "ingest_java_tree",
    "ingest_threads",
    "load_shard",
    "make_hasher",
    "merge_reports",
    "optimal_bands",
    "query",
    "removal_list",
    "save_shard",
    "shingle",
    "signature",
    "threshold_sweep",
    "trace",
    "write_token_shards",
]
