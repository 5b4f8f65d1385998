"""Rule-based lemma selection from POS tags and morphological analyses.

For each token the analyses compatible with its POS tag are kept.  One
survivor gives the lemma directly; several nominal survivors are
disambiguated by the gender and number of a preceding article ("il latte"
vs "le latte"); a form known only through decomposition gets its root
lemma; anything else falls back to the surface form.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Mapping, Sequence

from .errors import MissingPrerequisite, ResourceLoadError
from .morph.analysis import MorphAnalysis
from .pipeline import Document, Token

SOURCES = ("lexicon_match", "decomposition", "article_disambiguated", "fallback_surface")
ARTICLE_WINDOW = 3
NOMINAL = frozenset({"NOUN", "PROPN"})
VERBAL = frozenset({"VERB", "AUX"})
SURFACE_LEMMA = frozenset({"PUNCT", "NUM", "SYM"})


def _read(name: str, path: str | Path | None) -> str:
    try:
        if path is None:
            return resources.files("tintpipe.resources").joinpath(name).read_text("utf-8")
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ResourceLoadError(f"cannot read {path or name}: {exc}") from exc


def _rows(text: str, width: int, what: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != width:
            raise ResourceLoadError(f"{what} line {lineno}: expected {width} fields")
        yield fields


def load_articles(path: str | Path | None = None) -> dict[str, tuple[str | None, str | None]]:
    """Article form -> (gender, number); None where the form leaves it open."""
    table = {}
    for form, gender, number in _rows(_read("articles.tsv", path), 3, "article table"):
        table[form] = (None if gender == "-" else gender, None if number == "-" else number)
    return table


def load_compat(path: str | Path | None = None) -> dict[str, frozenset[str]]:
    """UPOS -> morphological categories compatible with it."""
    compat: dict[str, set[str]] = {}
    for category, tags in _rows(_read("category_compat.tsv", path), 2, "compatibility table"):
        for tag in tags.split(","):
            compat.setdefault(tag.strip(), set()).add(category)
    return {tag: frozenset(cats) for tag, cats in compat.items()}


_COMPAT = load_compat()
_ARTICLES = load_articles()


@dataclass(frozen=True)
class LemmaDecision:
    lemma: str
    source: str
    chosen_analysis: MorphAnalysis | None = None


def compatible_analyses(analyses: Sequence[MorphAnalysis], pos: str,
                        compat: Mapping[str, frozenset[str]] | None = None) -> list[MorphAnalysis]:
    cats = (compat or _COMPAT).get(pos, frozenset())
    return [a for a in analyses if a.category in cats]


def resolve_by_article(sentence: Sequence[Token], i: int, candidates: Sequence[MorphAnalysis],
                       articles: Mapping[str, tuple[str | None, str | None]] | None = None,
                       window: int = ARTICLE_WINDOW) -> MorphAnalysis | None:
    """Pick the candidate agreeing with the nearest article to the left of ``i``.

    The search covers at most ``window`` tokens and stops at a verb.
    """
    articles = _ARTICLES if articles is None else articles
    for j in range(i - 1, max(i - window, 0) - 1, -1):
        tok = sentence[j]
        if tok.pos in VERBAL:
            return None
        if tok.pos == "PRON":
            continue
        marks = articles.get(tok.surface.lower())
        if marks is None:
            continue
        gender, number = marks
        matching = [c for c in candidates
                    if (gender is None or c.gender == gender) and (number is None or c.number == number)]
        return matching[0] if len(matching) == 1 else None
    return None


def lemmatize_token(sentence: Sequence[Token], i: int,
                    articles: Mapping[str, tuple[str | None, str | None]] | None = None,
                    compat: Mapping[str, frozenset[str]] | None = None) -> LemmaDecision:
    token = sentence[i]
    pos = token.pos
    if pos is None:
        raise MissingPrerequisite(f"token {token.index} {token.surface!r} has no pos")
    morph = token.annotations.get("morph")
    if morph is None:
        raise MissingPrerequisite(f"token {token.index} {token.surface!r} has no morph layer")

    direct = [a for a in morph if a.derivation is None]
    found = compatible_analyses(direct, pos, compat)
    if len(found) == 1:
        return LemmaDecision(found[0].lemma, "lexicon_match", found[0])
    if found:
        if pos in NOMINAL and all(a.category == "noun" for a in found):
            chosen = resolve_by_article(sentence, i, found, articles)
            if chosen is not None:
                return LemmaDecision(chosen.lemma, "article_disambiguated", chosen)
        # store order breaks the remaining ties
        return LemmaDecision(found[0].lemma, "lexicon_match", found[0])

    derived = [a for a in morph if a.derivation is not None]
    if derived:
        chosen = (compatible_analyses(derived, pos, compat) or derived)[0]
        return LemmaDecision(chosen.lemma, "decomposition", chosen)

    surface = token.surface
    if pos == "PROPN" or pos in SURFACE_LEMMA:
        return LemmaDecision(surface, "fallback_surface")
    return LemmaDecision(surface.lower(), "fallback_surface")


class Lemmatizer:
    def __init__(self, articles=None, compat=None):
        self.articles = _ARTICLES if articles is None else articles
        self.compat = _COMPAT if compat is None else compat

    def annotate(self, doc: Document) -> None:
        for sentence in doc.sentence_tokens():
            decisions = [lemmatize_token(sentence, i, self.articles, self.compat)
                         for i in range(len(sentence))]
            for tok, d in zip(sentence, decisions):
                tok.annotations["lemma"] = d.lemma


def lemma_annotator(properties: Mapping[str, str]) -> Lemmatizer:
    articles = properties.get("articleFile")
    compat = properties.get("compatFile")
    return Lemmatizer(load_articles(articles) if articles else None,
                      load_compat(compat) if compat else None)
