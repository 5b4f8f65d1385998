"""Morphological analysis records and the Morph-it tagstring parser."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

CATEGORIES = ("noun", "verb", "adjective", "adverb", "determiner", "pronoun", "other")


@dataclass(frozen=True)
class MorphAnalysis:
    lemma: str
    category: str
    features: tuple[tuple[str, str], ...] = ()
    tag: str = ""
    derivation: "Decomposition | None" = field(default=None, compare=False)

    def __post_init__(self):
        if not self.lemma:
            raise ValueError("empty lemma")
        if self.category not in CATEGORIES:
            raise ValueError(f"unknown category {self.category!r}")

    def feature(self, key: str) -> str | None:
        for k, v in self.features:
            if k == key:
                return v
        return None

    @property
    def gender(self) -> str | None:
        return self.feature("gender")

    @property
    def number(self) -> str | None:
        return self.feature("number")

    def to_dict(self) -> dict:
        out = {"lemma": self.lemma, "category": self.category,
               "features": dict(self.features), "tag": self.tag}
        if self.derivation is not None:
            out["derivation"] = self.derivation.to_dict()
        return out


@dataclass(frozen=True)
class Decomposition:
    """A surface form split as prefix + root + infixes + suffix.

    ``root_surface`` is the root as it appears in the form ("portar");
    ``root`` is the lexicon key it resolved to ("portare").
    """

    prefix: str | None
    root: str
    root_surface: str
    infixes: tuple[str, ...]
    suffix: str | None
    root_analysis: MorphAnalysis

    @property
    def surface(self) -> str:
        return (self.prefix or "") + self.root_surface + "".join(self.infixes) + (self.suffix or "")

    @property
    def affix_count(self) -> int:
        return (self.prefix is not None) + len(self.infixes) + (self.suffix is not None)

    def to_dict(self) -> dict:
        return {"prefix": self.prefix, "root": self.root, "root_surface": self.root_surface,
                "infixes": list(self.infixes), "suffix": self.suffix,
                "root_lemma": self.root_analysis.lemma}


class TagParser:
    """Table-driven parser for tags such as ``NOUN-M:s`` or ``VER:ind+pres+3+s``."""

    def __init__(self, heads: dict[str, str], values: dict[str, str]):
        self.heads = heads
        self.values = values
        self.parse = lru_cache(maxsize=4096)(self._parse)

    @classmethod
    def load(cls, source: str | None = None) -> "TagParser":
        if source is None:
            source = resources.files("tintpipe.resources").joinpath("morphit_tags.tsv").read_text("utf-8")
        heads, values = {}, {}
        for line in source.splitlines():
            if not line.strip() or line.startswith("#"):
                continue
            kind, key, target = line.split("\t")
            (heads if kind == "head" else values)[key] = target
        return cls(heads, values)

    def _parse(self, tag: str) -> tuple[str, tuple[tuple[str, str], ...]]:
        head, _, tail = tag.partition(":")
        fields = head.split("-")
        category = self.heads.get(fields[0], "other")
        feats: dict[str, str] = {}
        kinds = []
        for part in fields[1:]:
            key = self.values.get(part.lower())
            if key is not None and key not in feats:
                feats[key] = part.lower()
            else:
                kinds.append(part.lower())
        if kinds:
            feats["type"] = "-".join(kinds)
        if tail:
            for part in tail.split("+"):
                key = self.values.get(part)
                if key is None:
                    key = "type" if "type" not in feats else "extra"
                feats.setdefault(key, part)
        return category, tuple(sorted(feats.items()))

    def analysis(self, lemma: str, tag: str) -> MorphAnalysis:
        category, feats = self.parse(tag)
        return MorphAnalysis(lemma, category, feats, tag)
