"""Full-form lexicon compilation and lookup."""

from __future__ import annotations

import hashlib
import logging
import struct
from functools import lru_cache
from pathlib import Path

from ..errors import MalformedLine, StoreCorrupt
from .analysis import MorphAnalysis, TagParser
from .sstable import SSTable, StoreHeader, write_table

log = logging.getLogger(__name__)

CASE_POLICIES = ("exact", "fold_first", "fold_all")
MAX_MALFORMED_RATIO = 0.10

_U16 = struct.Struct("<H")


def encode_analyses(pairs: list[tuple[str, str]]) -> bytes:
    out = bytearray(_U16.pack(len(pairs)))
    for lemma, tag in pairs:
        lb, tb = lemma.encode("utf-8"), tag.encode("utf-8")
        out += _U16.pack(len(lb)) + lb + _U16.pack(len(tb)) + tb
    return bytes(out)


def decode_analyses(data: bytes) -> list[tuple[str, str]]:
    try:
        (n,) = _U16.unpack_from(data, 0)
        pos = 2
        pairs = []
        for _ in range(n):
            (ll,) = _U16.unpack_from(data, pos)
            lemma = data[pos + 2:pos + 2 + ll].decode("utf-8")
            pos += 2 + ll
            (tl,) = _U16.unpack_from(data, pos)
            tag = data[pos + 2:pos + 2 + tl].decode("utf-8")
            pos += 2 + tl
            pairs.append((lemma, tag))
        return pairs
    except (struct.error, UnicodeDecodeError) as exc:
        raise StoreCorrupt(f"undecodable analyses: {exc}") from exc


def read_lexicon_tsv(data: bytes) -> tuple[dict[str, list[tuple[str, str]]], list[int], int]:
    """Parse ``form<TAB>lemma<TAB>tag`` lines.

    Returns (form -> unique (lemma, tag) pairs in input order, malformed line
    numbers, count of non-blank lines).
    """
    entries: dict[str, list[tuple[str, str]]] = {}
    seen: set[tuple[str, str, str]] = set()
    malformed: list[int] = []
    total = 0
    for lineno, raw in enumerate(data.split(b"\n"), 1):
        if not raw.strip():
            continue
        total += 1
        try:
            line = raw.rstrip(b"\r").decode("utf-8")
        except UnicodeDecodeError:
            malformed.append(lineno)
            continue
        fields = line.split("\t")
        if len(fields) != 3 or not all(f.strip() for f in fields):
            malformed.append(lineno)
            continue
        form, lemma, tag = (f.strip() for f in fields)
        if (form, lemma, tag) in seen:
            continue
        seen.add((form, lemma, tag))
        entries.setdefault(form, []).append((lemma, tag))
    return entries, malformed, total


def compile_lexicon(source: str | Path, output: str | Path) -> StoreHeader:
    """Compile a TSV full-form lexicon into a store file.

    Malformed lines are skipped and reported; more than 10% malformed lines
    aborts the compilation.
    """
    data = Path(source).read_bytes()
    entries, malformed, total = read_lexicon_tsv(data)
    if malformed:
        log.warning("%s: skipped %d malformed line(s): %s", source, len(malformed),
                    ", ".join(map(str, malformed[:20])))
        if len(malformed) > MAX_MALFORMED_RATIO * total:
            raise MalformedLine(malformed[0], f"{len(malformed)} of {total} lines malformed")
    items = sorted((form.encode("utf-8"), encode_analyses(pairs)) for form, pairs in entries.items())
    header = write_table(output, items, hashlib.sha256(data).digest())
    return StoreHeader(header.entry_count, header.checksum, header.version, header.block_size,
                       header.block_count, tuple(malformed))


class LexiconStore:
    """Read-only lexicon over a compiled store file."""

    def __init__(self, path: str | Path, tags: TagParser | None = None, cache_size: int = 1 << 17):
        self.table = SSTable(path)
        self.tags = tags or TagParser.load()
        self._exact = lru_cache(maxsize=cache_size)(self._lookup_exact)

    @property
    def header(self) -> StoreHeader:
        return self.table.header

    def __len__(self) -> int:
        return len(self.table)

    def close(self) -> None:
        self.table.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def clear_cache(self) -> None:
        self._exact.cache_clear()
        self.table.clear_cache()

    def _lookup_exact(self, surface: str) -> tuple[MorphAnalysis, ...]:
        raw = self.table.get(surface.encode("utf-8"))
        if raw is None:
            return ()
        analysis = self.tags.analysis
        return tuple(analysis(lemma, tag) for lemma, tag in decode_analyses(raw))

    def lookup(self, surface: str, case_policy: str = "exact") -> tuple[MorphAnalysis, ...]:
        found = self._exact(surface)
        if found or case_policy == "exact":
            return found
        if case_policy not in CASE_POLICIES:
            raise ValueError(f"unknown case policy {case_policy!r}")
        first = surface[:1].lower() + surface[1:]
        if first != surface:
            found = self._exact(first)
            if found:
                return found
        if case_policy == "fold_all":
            lower = surface.lower()
            if lower != surface and lower != first:
                return self._exact(lower)
        return ()

    def forms(self):
        for key in self.table.keys():
            yield key.decode("utf-8")

    def has_prefix(self, prefix: str) -> bool:
        for _ in self.table.prefix_items(prefix.encode("utf-8")):
            return True
        return False


def lookup(store: LexiconStore, surface: str, case_policy: str = "exact") -> list[MorphAnalysis]:
    return list(store.lookup(surface, case_policy))
