"""Prefix-root-infix-suffix decomposition of forms missing from the lexicon.

Enclitic pronouns attach to non-finite and imperative verb forms
("portar-glie-lo", "porta-ce-ne"); productive prefixes attach to content
words ("bi-direzionale").  A split is accepted only when its root resolves
in the lexicon with a compatible category.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from ..errors import ResourceLoadError
from .analysis import Decomposition, MorphAnalysis
from .lexicon import LexiconStore

MIN_ROOT = 3
PREFIXABLE = frozenset({"noun", "adjective", "verb", "adverb"})
CLITIC_HOSTS = frozenset({"inf", "ger", "impr", "part"})


@dataclass(frozen=True)
class AffixTable:
    prefixes: tuple[str, ...]
    clitics: tuple[str, ...]
    clusters: tuple[tuple[str, str], ...]
    restorations: tuple[tuple[str, str], ...]

    @classmethod
    def parse(cls, source: str) -> "AffixTable":
        prefixes, clitics, clusters, restore = [], [], [], []
        for lineno, line in enumerate(source.splitlines(), 1):
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.split("\t")
            kind = fields[0]
            if kind == "prefix" and len(fields) == 2:
                prefixes.append(fields[1])
            elif kind == "clitic" and len(fields) == 2:
                clitics.append(fields[1])
            elif kind == "cluster" and len(fields) == 3:
                clusters.append((fields[1], fields[2]))
            elif kind == "restore" and len(fields) == 3:
                restore.append((fields[1], fields[2]))
            else:
                raise ResourceLoadError(f"affix line {lineno}: cannot parse {line!r}")
        return cls(tuple(prefixes), tuple(clitics), tuple(clusters), tuple(restore))

    @classmethod
    def load(cls, path: str | Path | None = None) -> "AffixTable":
        try:
            if path is None:
                text = resources.files("tintpipe.resources").joinpath("affixes.tsv").read_text("utf-8")
            else:
                text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise ResourceLoadError(f"cannot read affix table {path}: {exc}") from exc
        return cls.parse(text)

    def clitic_splits(self, form: str):
        """Yield (stem, infixes, suffix) for every clitic ending of ``form``."""
        for a, b in self.clusters:
            if form.endswith(a + b):
                yield form[:-len(a + b)], (a,), b
        for c in self.clitics:
            if form.endswith(c):
                yield form[:-len(c)], (), c


def _verb_host(analyses) -> MorphAnalysis | None:
    # finite forms never host enclitics
    for a in analyses:
        if a.category == "verb" and a.feature("mood") in CLITIC_HOSTS | {None}:
            return a
    return None


def _content(analyses) -> MorphAnalysis | None:
    for a in analyses:
        if a.category in PREFIXABLE:
            return a
    return None


def decompose(store: LexiconStore, surface: str, affixes: AffixTable) -> list[Decomposition]:
    """All resolving decompositions of ``surface``, best first."""
    found: list[Decomposition] = []
    splits = [(surface, (), None)] + list(affixes.clitic_splits(surface))
    for stem, infixes, suffix in splits:
        has_clitic = suffix is not None
        prefixes = [None] + [p for p in affixes.prefixes if stem.startswith(p)]
        for prefix in prefixes:
            if prefix is None and not has_clitic:
                continue
            root_surface = stem[len(prefix):] if prefix else stem
            if len(root_surface) < MIN_ROOT:
                continue
            resolved = _resolve(store, root_surface, has_clitic, affixes)
            if resolved is not None:
                key, analysis = resolved
                found.append(Decomposition(prefix, key, root_surface, infixes, suffix, analysis))
    found.sort(key=lambda d: (d.affix_count, -len(d.root_surface), d.prefix or "", d.root))
    return found


def _resolve(store, root_surface, has_clitic, affixes):
    pick = _verb_host if has_clitic else _content
    analysis = pick(store.lookup(root_surface))
    if analysis is not None:
        return root_surface, analysis
    if not has_clitic:
        return None
    for ending, replacement in affixes.restorations:
        if root_surface.endswith(ending):
            key = root_surface[:-len(ending)] + replacement
            analysis = pick(store.lookup(key))
            if analysis is not None:
                return key, analysis
    return None


class Decomposer:
    """Cached decomposition bound to one store and affix table."""

    def __init__(self, store: LexiconStore, affixes: AffixTable | None = None, cache_size: int = 1 << 16):
        self.store = store
        self.affixes = affixes or AffixTable.load()
        self.decompose = lru_cache(maxsize=cache_size)(self._decompose)

    def _decompose(self, surface: str) -> tuple[Decomposition, ...]:
        return tuple(decompose(self.store, surface, self.affixes))
