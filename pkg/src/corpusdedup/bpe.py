"""Byte-level BPE tokenizer compatible with published GPT-2 vocab files.

Vocab files are external inputs in the standard published layouts: a JSON
token->id map (`vocab.json` or `encoder.json`) and a ranked merges list
(`merges.txt` or `vocab.bpe`, first line an optional `#version` comment).
The encoder pre-splits text with the GPT-2 regex, maps bytes through the
byte/unicode table, applies merges by ascending rank, and looks up ids;
decoding inverts exactly, so decode(encode(x)) == x for any UTF-8 string.
"""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path

import regex

from .errors import UnknownTokenId, VocabMissingSymbol
from .stablehash import fingerprint64

__all__ = ["BpeVocab", "bpe_encode", "bpe_decode", "bytes_to_unicode"]

END_OF_TEXT = "<|endoftext|>"

# the GPT-2 pre-tokenization pattern: contractions, letter runs, number runs,
# punctuation runs, and whitespace kept with the following word
_PRETOKENIZE = regex.compile(
    r"""'s|'t|'re|'ve|'m|'ll|'d| ?\p{L}+| ?\p{N}+| ?[^\s\p{L}\p{N}]+|\s+(?!\S)|\s+"""
)


@lru_cache(maxsize=1)
def bytes_to_unicode() -> dict:
    """The canonical reversible byte -> printable-unicode table."""
    bs = (
        list(range(ord("!"), ord("~") + 1))
        + list(range(ord("\xa1"), ord("\xac") + 1))
        + list(range(ord("\xae"), ord("\xff") + 1))
    )
    cs = bs[:]
    n = 0
    for b in range(256):
        if b not in bs:
            bs.append(b)
            cs.append(256 + n)
            n += 1
    return dict(zip(bs, (chr(c) for c in cs)))


def _get_pairs(word: tuple) -> set:
    return {(word[i], word[i + 1]) for i in range(len(word) - 1)}


class BpeVocab:
    """Loaded vocabulary: byte table, ranked merges, token/id maps."""

    def __init__(self, token_to_id: dict, merges: list):
        if len(token_to_id) > 65536:
            raise VocabMissingSymbol(
                f"vocab has {len(token_to_id)} tokens; shard format caps ids at 65536"
            )
        self.token_to_id = dict(token_to_id)
        self.id_to_token = {i: t for t, i in self.token_to_id.items()}
        if len(self.id_to_token) != len(self.token_to_id):
            raise VocabMissingSymbol("vocab maps two tokens to one id")
        seen = set()
        for pair in merges:
            if pair in seen:
                raise VocabMissingSymbol(f"duplicate merge rule {pair}")
            seen.add(pair)
            if (pair[0] + pair[1]) not in self.token_to_id:
                raise VocabMissingSymbol(f"merge {pair} produces a symbol missing from vocab")
        self.merge_ranks = {pair: rank for rank, pair in enumerate(merges)}
        self.byte_encoder = bytes_to_unicode()
        self.byte_decoder = {c: b for b, c in self.byte_encoder.items()}
        missing_units = [u for u in self.byte_encoder.values() if u not in self.token_to_id]
        if missing_units:
            raise VocabMissingSymbol(
                f"vocab lacks {len(missing_units)} byte units (e.g. {missing_units[0]!r})"
            )
        self.eot_id = self.token_to_id.get(END_OF_TEXT)
        self._cache: dict = {}

    @classmethod
    def load(cls, vocab_file, merges_file) -> "BpeVocab":
        with open(vocab_file, "r", encoding="utf-8") as fh:
            token_to_id = json.load(fh)
        merges = []
        with open(merges_file, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.rstrip("\n")
                if not line or line.startswith("#version"):
                    continue
                left, sep, right = line.partition(" ")
                if not sep:
                    raise VocabMissingSymbol(f"bad merges line: {line!r}")
                merges.append((left, right))
        return cls(token_to_id, merges)

    @classmethod
    def from_dir(cls, directory) -> "BpeVocab":
        """Find vocab/merges under their huggingface or openai names."""
        directory = Path(directory)
        for vocab_name, merges_name in (("vocab.json", "merges.txt"), ("encoder.json", "vocab.bpe")):
            v, m = directory / vocab_name, directory / merges_name
            if v.exists() and m.exists():
                return cls.load(v, m)
        raise FileNotFoundError(f"no vocab.json/merges.txt or encoder.json/vocab.bpe in {directory}")

    def __len__(self) -> int:
        return len(self.token_to_id)

    def fingerprint(self) -> int:
        """Stable identity of the vocab content, recorded in shard manifests."""
        tokens = json.dumps(self.token_to_id, sort_keys=True, ensure_ascii=False)
        merges = ";".join(a + " " + b for (a, b), _ in sorted(self.merge_ranks.items(), key=lambda kv: kv[1]))
        return fingerprint64("bpe", tokens, merges)

    def _merge(self, token: str) -> tuple:
        """Apply merges by ascending rank within one pre-token."""
        cached = self._cache.get(token)
        if cached is not None:
            return cached
        word = tuple(token)
        pairs = _get_pairs(word)
        ranks = self.merge_ranks
        while pairs:
            bigram = min(pairs, key=lambda p: ranks.get(p, 1 << 60))
            if bigram not in ranks:
                break
            first, second = bigram
            merged = []
            i = 0
            while i < len(word):
                if word[i] == first and i + 1 < len(word) and word[i + 1] == second:
                    merged.append(first + second)
                    i += 2
                else:
                    merged.append(word[i])
                    i += 1
            word = tuple(merged)
            if len(word) == 1:
                break
            pairs = _get_pairs(word)
        if len(self._cache) > 100_000:
            self._cache.clear()
        self._cache[token] = word
        return word


def bpe_encode(text: str, vocab: BpeVocab) -> list:
    """Encode a UTF-8 string to token ids."""
    ids = []
    byte_encoder = vocab.byte_encoder
    token_to_id = vocab.token_to_id
    for pretoken in _PRETOKENIZE.findall(text):
        mapped = "".join(byte_encoder[b] for b in pretoken.encode("utf-8"))
        for symbol in vocab._merge(mapped):
            try:
                ids.append(token_to_id[symbol])
            except KeyError:
                raise VocabMissingSymbol(f"symbol {symbol!r} missing from vocab") from None
    return ids


def bpe_decode(ids, vocab: BpeVocab) -> str:
    """Decode token ids back to text; exact inverse of bpe_encode."""
    id_to_token = vocab.id_to_token
    chunks = []
    for i in ids:
        token = id_to_token.get(int(i))
        if token is None:
            raise UnknownTokenId(f"token id {i} outside vocab of size {len(vocab)}")
        chunks.append(token)
    text = "".join(chunks)
    byte_decoder = vocab.byte_decoder
    return bytes(byte_decoder[c] for c in text).decode("utf-8", errors="replace")
