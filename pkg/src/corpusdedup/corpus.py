"""Document store with provenance traceability, filtering and holdout split.

Raw sources (Java project trees, discussion-thread dumps) become Documents
with sequential 64-bit ids assigned in ingestion order, so two ingestions of
the same input in the same order mint identical ids. The on-disk layout is a
directory with a `docs.txt` record file (tab-separated, text base64-encoded
to keep newlines out of the framing) and a `meta` file with counts and the
format version.
"""

from __future__ import annotations

import base64
import html
import json
import logging
import re
from collections import Counter
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path

from .errors import IoFailure, MalformedRecord, NotUtf8, UnbalancedBraces, UnknownId
from .javalex import scan_methods

__all__ = [
    "DocKind",
    "Provenance",
    "Document",
    "MethodRecord",
    "CorpusStore",
    "extract_java_methods",
    "filter_methods",
    "ingest_threads",
    "ingest_java_tree",
    "extract_holdout",
    "trace",
    "read_thread_records",
    "read_holdout_ids",
]

log = logging.getLogger(__name__)

_STORE_VERSION = 1
_TAG_RE = re.compile(r"<[^>]*>")


class DocKind(str, Enum):
    JAVA_METHOD = "java_method"
    DISCUSSION_THREAD = "discussion_thread"


@dataclass(frozen=True)
class Provenance:
    """Where a document came from; threads carry only the source id."""

    project: str
    file_path: str
    start_line: int
    end_line: int


@dataclass(frozen=True)
class Document:
    id: int
    kind: DocKind
    text: str
    provenance: Provenance

    def __post_init__(self) -> None:
        if self.id < 0 or self.id >= 1 << 64:
            raise ValueError(f"document id out of unsigned 64-bit range: {self.id}")


@dataclass(frozen=True)
class MethodRecord:
    """An extracted Java method plus its declaration header and doc comment."""

    document: Document
    signature_text: str
    doc_comment: str | None
    parse_error: bool = False
    body_empty: bool = False


def extract_java_methods(source, project: str, file_path: str) -> list:
    """Extract every method/constructor from one Java source file.

    Brace-balanced scanning at class-member depth; see javalex for the exact
    extraction rules. Raises UnbalancedBraces for corrupt files (the caller
    discards the whole file) and NotUtf8 for undecodable bytes.
    """
    raws = scan_methods(source)
    records = []
    text = source
    if isinstance(text, (bytes, bytearray)):
        text = bytes(text).decode("utf-8")  # scan_methods already validated
    for raw in raws:
        doc = Document(
            id=0,
            kind=DocKind.JAVA_METHOD,
            text=raw.text,
            provenance=Provenance(
                project=project,
                file_path=file_path,
                start_line=raw.start_line,
                end_line=raw.end_line,
            ),
        )
        body = text[raw.body_start + 1 : raw.body_end]
        records.append(
            MethodRecord(
                document=doc,
                signature_text=raw.signature_text,
                doc_comment=raw.doc_comment,
                parse_error=raw.parse_error,
                body_empty=not body.strip(),
            )
        )
    return records


def filter_methods(records: list) -> list:
    """Drop empty-bodied methods and records flagged with parse errors."""
    return [r for r in records if not r.body_empty and not r.parse_error]


def _strip_markup(text: str) -> str:
    return html.unescape(_TAG_RE.sub("", text))


def ingest_threads(records, strip_markup: bool = True) -> list:
    """Turn (thread_id, title, body_texts) records into thread Documents.

    Text is the title and posts joined by blank lines. Records missing an id
    or title are skipped with a warning (the CLI reports the count). Ids are
    placeholders until the documents enter a store; the source thread id is
    kept in provenance.project for traceability.
    """
    docs = []
    for record in records:
        thread_id, title, posts = record
        if thread_id is None or title is None:
            log.warning("skipping malformed thread record: %r", record)
            continue
        parts = [str(title)] + [str(p) for p in posts]
        text = "\n\n".join(parts)
        if strip_markup:
            text = _strip_markup(text)
        docs.append(
            Document(
                id=0,
                kind=DocKind.DISCUSSION_THREAD,
                text=text,
                provenance=Provenance(
                    project=str(thread_id), file_path="", start_line=0, end_line=0
                ),
            )
        )
    return docs


def read_thread_records(path):
    """Yield (thread_id, title, posts) from a newline-delimited JSON dump.

    Lines missing thread_id or title yield (None, None, []) so ingest_threads
    can count the skip; undecodable JSON raises MalformedRecord.
    """
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedRecord(f"{path}:{lineno}: bad JSON: {exc}") from exc
            yield obj.get("thread_id"), obj.get("title"), obj.get("posts") or []


class CorpusStore:
    """Ordered, append-only document collection with id lookup.

    A single writer appends during ingestion; afterwards the store is
    effectively immutable and safe for concurrent readers.
    """

    def __init__(self) -> None:
        self.documents: list[Document] = []
        self.by_id: dict[int, int] = {}
        self.counts: Counter = Counter()
        self._next_id = 0

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self):
        return iter(self.documents)

    def add(self, doc: Document) -> Document:
        """Append a document, assigning the next sequential id."""
        assigned = replace(doc, id=self._next_id)
        self._next_id += 1
        self.by_id[assigned.id] = len(self.documents)
        self.documents.append(assigned)
        self.counts[assigned.kind.value] += 1
        return assigned

    def get(self, doc_id: int) -> Document:
        pos = self.by_id.get(doc_id)
        if pos is None:
            raise UnknownId(f"document id {doc_id} not in store")
        return self.documents[pos]

    def ids(self) -> set:
        return set(self.by_id)

    # persistence -----------------------------------------------------------

    def save(self, directory) -> None:
        directory = Path(directory)
        try:
            directory.mkdir(parents=True, exist_ok=True)
            with open(directory / "docs.txt", "w", encoding="utf-8") as fh:
                for doc in self.documents:
                    b64 = base64.b64encode(doc.text.encode("utf-8")).decode("ascii")
                    p = doc.provenance
                    fh.write(
                        f"{doc.id}\t{doc.kind.value}\t{b64}\t{p.project}\t{p.file_path}"
                        f"\t{p.start_line}\t{p.end_line}\n"
                    )
            with open(directory / "meta", "w", encoding="utf-8") as fh:
                fh.write(f"version={_STORE_VERSION}\n")
                fh.write(f"documents={len(self.documents)}\n")
                for kind in DocKind:
                    fh.write(f"{kind.value}={self.counts.get(kind.value, 0)}\n")
        except OSError as exc:
            raise IoFailure(f"cannot write corpus store {directory}: {exc}") from exc

    @classmethod
    def load(cls, directory) -> "CorpusStore":
        directory = Path(directory)
        store = cls()
        try:
            with open(directory / "docs.txt", "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.rstrip("\n")
                    if not line:
                        continue
                    doc_id, kind, b64, project, file_path, start, end = line.split("\t")
                    doc = Document(
                        id=int(doc_id),
                        kind=DocKind(kind),
                        text=base64.b64decode(b64).decode("utf-8"),
                        provenance=Provenance(
                            project=project,
                            file_path=file_path,
                            start_line=int(start),
                            end_line=int(end),
                        ),
                    )
                    store.by_id[doc.id] = len(store.documents)
                    store.documents.append(doc)
                    store.counts[doc.kind.value] += 1
        except OSError as exc:
            raise IoFailure(f"cannot read corpus store {directory}: {exc}") from exc
        store._next_id = max(store.by_id, default=-1) + 1
        return store


def ingest_java_tree(
    store: CorpusStore,
    root,
    project: str | None = None,
    include_doc_comments: bool = False,
) -> dict:
    """Walk a project tree, extract and filter methods, append to the store.

    Files that fail extraction (unbalanced braces, undecodable bytes) are
    discarded wholesale and counted. Returns ingestion statistics.
    """
    root = Path(root)
    stats = {"files": 0, "corrupt_files": 0, "methods": 0, "filtered": 0}
    proj = project if project is not None else root.name
    for path in sorted(root.rglob("*.java")):
        stats["files"] += 1
        rel = path.relative_to(root).as_posix()
        try:
            records = extract_java_methods(path.read_bytes(), proj, rel)
        except (UnbalancedBraces, NotUtf8):
            stats["corrupt_files"] += 1
            continue
        kept = filter_methods(records)
        stats["filtered"] += len(records) - len(kept)
        for rec in kept:
            text = rec.document.text
            if include_doc_comments and rec.doc_comment:
                text = rec.doc_comment + "\n" + text
            store.add(replace(rec.document, text=text))
            stats["methods"] += 1
    return stats


def extract_holdout(store: CorpusStore, holdout_ids) -> tuple:
    """Split ids into (holdout documents in id order, remainder id set).

    The store itself is not modified. Raises UnknownId when an id is absent.
    """
    holdout_ids = set(holdout_ids)
    missing = holdout_ids - store.ids()
    if missing:
        raise UnknownId(f"holdout ids not in store: {sorted(missing)[:10]}")
    holdout = [store.get(i) for i in sorted(holdout_ids)]
    remainder = store.ids() - holdout_ids
    return holdout, remainder


def trace(store: CorpusStore, doc_id: int) -> Provenance:
    """Provenance recorded at ingestion for one document."""
    return store.get(doc_id).provenance


def read_holdout_ids(path) -> set:
    """One decimal id per line."""
    ids = set()
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                ids.add(int(line))
    return ids
