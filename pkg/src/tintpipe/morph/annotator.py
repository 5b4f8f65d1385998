from __future__ import annotations

from dataclasses import replace
from functools import lru_cache
from typing import Mapping

from ..errors import ResourceLoadError, StoreCorrupt
from ..pipeline import Document
from .analysis import MorphAnalysis
from .decompose import AffixTable, Decomposer
from .lexicon import CASE_POLICIES, LexiconStore


class MorphAnalyzer:
    """Lexicon lookup with decomposition fallback; immutable after construction."""

    def __init__(self, store: LexiconStore, affixes: AffixTable | None = None,
                 case_policy: str = "fold_all", cache_size: int = 1 << 17):
        if case_policy not in CASE_POLICIES:
            raise ValueError(f"unknown case policy {case_policy!r}")
        self.store = store
        self.decomposer = Decomposer(store, affixes)
        self.case_policy = case_policy
        self.analyze = lru_cache(maxsize=cache_size)(self._analyze)

    def _analyze(self, surface: str) -> tuple[MorphAnalysis, ...]:
        found = self.store.lookup(surface, self.case_policy)
        if found or not any(ch.isalpha() for ch in surface):
            return found
        decomps = self.decomposer.decompose(surface)
        if not decomps and surface != surface.lower():
            decomps = self.decomposer.decompose(surface.lower())
        # a prefix stays part of the lemma ("bidirezionale"); clitics do not
        return tuple(replace(d.root_analysis, lemma=(d.prefix or "") + d.root_analysis.lemma, derivation=d)
                     for d in decomps)

    def clear_cache(self) -> None:
        """Drop every memo table, down to the store's block cache."""
        self.analyze.cache_clear()
        self.decomposer.decompose.cache_clear()
        self.store.clear_cache()

    def annotate(self, doc: Document) -> None:
        analyze = self.analyze
        for tok in doc.tokens:
            tok.annotations["morph"] = list(analyze(tok.surface))


def morph_annotator(properties: Mapping[str, str]) -> MorphAnalyzer:
    from ..resources import default_lexicon_path

    path = properties.get("lexicon") or default_lexicon_path()
    try:
        store = LexiconStore(path)
    except (OSError, StoreCorrupt) as exc:
        raise ResourceLoadError(f"cannot open lexicon store {path}: {exc}") from exc
    affixes = AffixTable.load(properties.get("affixFile"))
    return MorphAnalyzer(store, affixes, properties.get("casePolicy", "fold_all"))
