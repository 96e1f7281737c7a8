"""HTTP service for checking documents against built indexes online.

Endpoints (UTF-8 JSON):
  POST /api/check     {text, dataset, threshold, verify} -> matches + timing
  GET  /api/datasets  loaded datasets with their threshold grids
  GET  /api/health    liveness, shard count, uptime

Configuration is a key=value file (see ServiceConfig.load); the listen
address can be overridden with the CORPUSDEDUP_LISTEN environment variable.
All index state is immutable after load; reload() swaps in a freshly loaded
registry behind a single attribute assignment, so requests never observe a
partially loaded index. The built web UI, when configured, is served at /.
"""

from __future__ import annotations

import json
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .corpus import CorpusStore
from .dedup import IndexManifest
from .errors import CorpusDedupError
from .lsh import load_shard, load_signatures, query
from .minhash import estimate_jaccard, exact_jaccard, make_hasher, signature
from .shingle import shingle

__all__ = ["ServiceConfig", "ServiceState", "create_app", "main"]

_PREVIEW_CHARS = 500


@dataclass
class ServiceConfig:
    listen: str = "127.0.0.1:8765"
    static_dir: str | None = None
    max_document_bytes: int = 1 << 20
    request_timeout_seconds: float = 30.0
    # dataset name -> list of manifest paths (files or directories to scan)
    index_roots: dict = field(default_factory=dict)
    # dataset name -> corpus store directory (provenance/preview/exact verify)
    store_paths: dict = field(default_factory=dict)

    @classmethod
    def load(cls, path) -> "ServiceConfig":
        """Parse the key=value config file.

        Recognized keys: listen, static_dir, max_document_bytes,
        request_timeout_seconds, dataset.<name>.index (repeatable; manifest
        file or directory of manifests), dataset.<name>.store.
        """
        config = cls()
        with open(path, "r", encoding="utf-8") as fh:
            for raw in fh:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                key, _, value = line.partition("=")
                key, value = key.strip(), value.strip()
                if key == "listen":
                    config.listen = value
                elif key == "static_dir":
                    config.static_dir = value
                elif key == "max_document_bytes":
                    config.max_document_bytes = int(value)
                elif key == "request_timeout_seconds":
                    config.request_timeout_seconds = float(value)
                elif key.startswith("dataset."):
                    _, name, attr = key.split(".", 2)
                    if attr == "index":
                        config.index_roots.setdefault(name, []).append(value)
                    elif attr == "store":
                        config.store_paths[name] = value
        env_listen = os.environ.get("CORPUSDEDUP_LISTEN")
        if env_listen:
            config.listen = env_listen
        return config


@dataclass
class _LoadedIndex:
    """All parts of one (dataset, threshold) build, resident in memory."""

    manifest: IndexManifest
    shards: list
    signatures: list  # per part: id -> MinHashSignature

    @property
    def shard_count(self) -> int:
        return len(self.shards)


@dataclass
class _DatasetEntry:
    name: str
    indexes: dict  # threshold string -> _LoadedIndex
    store: CorpusStore | None

    def thresholds(self) -> list:
        return sorted(ix.manifest.threshold for ix in self.indexes.values())

    def doc_count(self) -> int:
        return max((ix.manifest.doc_count for ix in self.indexes.values()), default=0)

    def part_count(self) -> int:
        return max((ix.manifest.part_count for ix in self.indexes.values()), default=0)


class _Registry:
    def __init__(self, datasets: dict):
        self.datasets = datasets

    @property
    def loaded_shards(self) -> int:
        return sum(
            ix.shard_count for ds in self.datasets.values() for ix in ds.indexes.values()
        )


def _manifest_paths(root: str) -> list:
    path = Path(root)
    if path.is_dir():
        return sorted(path.glob("*.manifest.json"))
    return [path]


def _load_registry(config: ServiceConfig) -> _Registry:
    datasets = {}
    for name, roots in config.index_roots.items():
        indexes = {}
        store = None
        store_dir = config.store_paths.get(name)
        for root in roots:
            for mpath in _manifest_paths(root):
                manifest = IndexManifest.load(mpath)
                index_dir = mpath.parent
                shards = []
                sigs = []
                for part in range(manifest.part_count):
                    shards.append(load_shard(manifest.path_for_part(index_dir, part)))
                    sigs.append(
                        load_signatures(
                            manifest.sig_path_for_part(index_dir, part),
                            manifest.k,
                            manifest.seed,
                            manifest.shingle_fingerprint,
                        )
                    )
                indexes[format(manifest.threshold, "g")] = _LoadedIndex(
                    manifest=manifest, shards=shards, signatures=sigs
                )
                if store_dir is None and manifest.store:
                    store_dir = manifest.store
        if store_dir:
            store = CorpusStore.load(store_dir)
        if indexes:
            datasets[name] = _DatasetEntry(name=name, indexes=indexes, store=store)
    return _Registry(datasets)


class ServiceState:
    """Owns the registry; reload() swaps it atomically."""

    def __init__(self, config: ServiceConfig, defer_load: bool = False):
        self.config = config
        self.started = time.monotonic()
        self.registry: _Registry | None = None
        if not defer_load:
            self.reload()

    def reload(self) -> None:
        self.registry = _load_registry(self.config)

    @property
    def ready(self) -> bool:
        return self.registry is not None

    def uptime(self) -> float:
        return time.monotonic() - self.started


class CheckRequest(BaseModel):
    text: str
    dataset: str
    threshold: float
    verify: str = "signature"


def _run_check(state: ServiceState, req: CheckRequest) -> dict:
    registry = state.registry
    entry = registry.datasets.get(req.dataset)
    if entry is None:
        return {"_error": (400, f"unknown dataset {req.dataset!r}")}
    index = entry.indexes.get(format(req.threshold, "g"))
    if index is None:
        grid = [format(t, "g") for t in entry.thresholds()]
        return {"_error": (400, f"threshold {req.threshold:g} not built; available: {grid}")}
    if req.verify not in ("none", "signature", "exact"):
        return {"_error": (400, f"unknown verify mode {req.verify!r}")}
    if req.verify == "exact" and entry.store is None:
        return {"_error": (400, "exact verification needs a configured corpus store")}
    if len(req.text.encode("utf-8")) > state.config.max_document_bytes:
        return {"_error": (400, f"document exceeds {state.config.max_document_bytes} bytes")}

    started = time.perf_counter()
    manifest = index.manifest
    hasher = make_hasher(manifest.k, manifest.seed)
    test_set = shingle(req.text, manifest.shingle_config)
    test_sig = signature(hasher, test_set)
    matches = {}
    for part, shard in enumerate(index.shards):
        part_sigs = index.signatures[part]
        for cid in query(shard, test_sig).ids:
            if cid in matches:
                continue
            if req.verify == "exact":
                sim = exact_jaccard(test_set, shingle(entry.store.get(cid).text, manifest.shingle_config))
            else:
                cand = part_sigs.get(cid)
                sim = estimate_jaccard(test_sig, cand) if cand is not None else 0.0
            if req.verify in ("signature", "exact") and sim < manifest.threshold:
                continue
            matches[cid] = sim
    rows = []
    for cid, sim in sorted(matches.items(), key=lambda kv: (-kv[1], kv[0])):
        provenance = {"project": "", "file_path": "", "start_line": 0, "end_line": 0}
        preview = ""
        if entry.store is not None:
            doc = entry.store.get(cid)
            p = doc.provenance
            provenance = {
                "project": p.project,
                "file_path": p.file_path,
                "start_line": p.start_line,
                "end_line": p.end_line,
            }
            preview = doc.text[:_PREVIEW_CHARS]
        rows.append({"id": cid, "similarity": sim, "provenance": provenance, "preview": preview})
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return {
        "matches": rows,
        "threshold": manifest.threshold,
        "parts": len(index.shards),
        "elapsed_ms": elapsed_ms,
    }


def create_app(config: ServiceConfig, defer_load: bool = False) -> FastAPI:
    app = FastAPI(title="corpusdedup", docs_url=None, redoc_url=None)
    state = ServiceState(config, defer_load=defer_load)
    app.state.service = state

    @app.middleware("http")
    async def access_log(request: Request, call_next):
        started = time.perf_counter()
        response = await call_next(request)
        elapsed = (time.perf_counter() - started) * 1000.0
        sys.stdout.write(
            f"{request.method} {request.url.path} {response.status_code} {elapsed:.1f}ms\n"
        )
        return response

    @app.post("/api/check")
    async def api_check(request: Request):
        if not state.ready:
            return JSONResponse({"detail": "indexes still loading"}, status_code=503)
        # decode by hand so undecodable text is a 422, as documented
        body = await request.body()
        try:
            payload = json.loads(body.decode("utf-8"))
            req = CheckRequest(**payload)
        except (UnicodeDecodeError, ValueError) as exc:
            return JSONResponse({"detail": f"undecodable request: {exc}"}, status_code=422)
        try:
            result = _run_check(state, req)
        except CorpusDedupError as exc:
            return JSONResponse({"detail": str(exc)}, status_code=500)
        if "_error" in result:
            code, detail = result["_error"]
            return JSONResponse({"detail": detail}, status_code=code)
        return result

    @app.get("/api/datasets")
    def api_datasets():
        if not state.ready:
            return JSONResponse({"detail": "indexes still loading"}, status_code=503)
        out = []
        for name in sorted(state.registry.datasets):
            entry = state.registry.datasets[name]
            out.append(
                {
                    "name": name,
                    "thresholds": entry.thresholds(),
                    "doc_count": entry.doc_count(),
                    "part_count": entry.part_count(),
                }
            )
        return out

    @app.get("/api/health")
    def api_health():
        return {
            "status": "ok" if state.ready else "loading",
            "loaded_shards": state.registry.loaded_shards if state.ready else 0,
            "uptime_seconds": state.uptime(),
        }

    if config.static_dir and Path(config.static_dir).is_dir():
        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="ui")

    return app


def main(argv=None) -> int:
    """Run the service: python -m corpusdedup.service --config service.conf"""
    import argparse

    import uvicorn

    parser = argparse.ArgumentParser(prog="corpusdedup-service")
    parser.add_argument("--config", required=True, help="key=value configuration file")
    args = parser.parse_args(argv)
    config = ServiceConfig.load(args.config)
    host, _, port = config.listen.rpartition(":")
    app = create_app(config)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port), log_level="warning")
    return 0


if __name__ == "__main__":
    sys.exit(main())
