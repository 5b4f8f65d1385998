"""Token alignment and accuracy scoring against CoNLL-U gold data.

Two tokenizations of one text are aligned by character offsets.  Tokens
whose spans overlap are grouped (connected components of the overlap
relation); a group is

    exact       one system and one gold token with identical spans
    merged      one system token spanning two or more gold tokens
                (the system merged what the gold splits, e.g. "S.p.A.")
    split       one gold token spanning two or more system tokens
    mismatched  anything else, including tokens overlapping nothing

Accuracy counts matches on exactly aligned tokens and divides by the number
of gold tokens, so tokenization disagreements count as errors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .conll import ConlluSentence
from .errors import EmptyGold, OffsetDomainError
from .pipeline import Document
from .tagger import coarse_map

KINDS = ("exact", "merged", "split", "mismatched")

Span = tuple[int, int]


@dataclass(frozen=True)
class AlignmentGroup:
    kind: str
    system: tuple[int, ...]
    gold: tuple[int, ...]


@dataclass
class Alignment:
    groups: list[AlignmentGroup] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, int]:
        out = dict.fromkeys(KINDS, 0)
        for g in self.groups:
            out[g.kind] += 1
        return out

    @property
    def pairs(self) -> list[tuple[int | None, int | None]]:
        """(system index or None, gold index or None) pairs in text order."""
        out: list[tuple[int | None, int | None]] = []
        for g in self.groups:
            if g.system and g.gold:
                out.extend((s, t) for s in g.system for t in g.gold)
            else:
                out.extend((s, None) for s in g.system)
                out.extend((None, t) for t in g.gold)
        return out

    def exact(self) -> dict[int, int]:
        """gold index -> system index for exactly aligned tokens."""
        return {g.gold[0]: g.system[0] for g in self.groups if g.kind == "exact"}


def _check(spans: Sequence[Span], length: int | None, side: str) -> None:
    prev = 0
    for k, (b, e) in enumerate(spans):
        if b < 0 or e <= b or (length is not None and e > length):
            raise OffsetDomainError(f"{side} span {k} ({b}, {e}) outside text of length {length}")
        if b < prev:
            raise OffsetDomainError(f"{side} span {k} ({b}, {e}) is out of order")
        prev = b


def _classify(sys_spans, gold_spans, s_ids, g_ids) -> str:
    if len(s_ids) == 1 and len(g_ids) == 1:
        return "exact" if sys_spans[s_ids[0]] == gold_spans[g_ids[0]] else "mismatched"
    if len(s_ids) == 1 and len(g_ids) >= 2:
        b, e = sys_spans[s_ids[0]]
        inner = [gold_spans[g] for g in g_ids]
        if min(x for x, _ in inner) == b and max(y for _, y in inner) == e:
            return "merged"
    if len(g_ids) == 1 and len(s_ids) >= 2:
        b, e = gold_spans[g_ids[0]]
        inner = [sys_spans[s] for s in s_ids]
        if min(x for x, _ in inner) == b and max(y for _, y in inner) == e:
            return "split"
    return "mismatched"


def align_tokens(system: Sequence[Span], gold: Sequence[Span],
                 text_length: int | None = None) -> Alignment:
    """Group overlapping system and gold spans; both lists ordered by offset."""
    _check(system, text_length, "system")
    _check(gold, text_length, "gold")
    # sweep over both sides in begin order; a span joins the open group when
    # it starts before the group's furthest end
    events = sorted([(b, e, 0, k) for k, (b, e) in enumerate(system)]
                    + [(b, e, 1, k) for k, (b, e) in enumerate(gold)])
    groups = []
    s_ids: list[int] = []
    g_ids: list[int] = []
    end = -1

    def close():
        if s_ids or g_ids:
            groups.append(AlignmentGroup(_classify(system, gold, s_ids, g_ids),
                                         tuple(s_ids), tuple(g_ids)))

    for b, e, side, k in events:
        if b >= end:
            close()
            s_ids, g_ids = [], []
            end = e
        end = max(end, e)
        (g_ids if side else s_ids).append(k)
    close()
    return Alignment(groups)


@dataclass(frozen=True)
class GoldToken:
    form: str
    upos: str
    lemma: str
    sentence: int
    position: int  # 0-based word index in its sentence
    span: Span | None  # None when the form cannot be located in the text


def gold_tokens(doc_text: str, sentences: Sequence[ConlluSentence]) -> list[GoldToken]:
    """Gold words with their offsets located in ``doc_text``.

    Forms are matched left to right.  When the text holds the surface form of
    a multiword token ("della"), its words share that span and so never align
    exactly; when it holds the words themselves ("di la"), each is located.
    """
    out: list[GoldToken] = []
    cursor = 0
    for si, sent in enumerate(sentences):
        ranges = {lo: (hi, row[1]) for lo, hi, row in sent.ranges()}
        shared_until = 0
        span: Span | None = None
        for pos, row in enumerate(sent.words()):
            ident = int(row[0])
            if ident in ranges:
                hi, surface = ranges[ident]
                found, after = _locate(doc_text, surface, cursor, strict=True)
                if found is not None:
                    span, cursor, shared_until = found, after, hi
                    out.append(GoldToken(row[1], row[3], row[2], si, pos, span))
                    continue
            if ident > shared_until:
                span, cursor = _locate(doc_text, row[1], cursor)
            out.append(GoldToken(row[1], row[3], row[2], si, pos, span))
    return out


_SLACK = 64


def _locate(text: str, form: str, cursor: int, strict: bool = False) -> tuple[Span | None, int]:
    if strict:
        k = cursor
        while k < len(text) and text[k].isspace():
            k += 1
        if not text.startswith(form, k):
            return None, cursor
        return (k, k + len(form)), k + len(form)
    k = text.find(form, cursor, cursor + len(form) + _SLACK)
    if k < 0:
        return None, cursor
    return (k, k + len(form)), k + len(form)


def align_to_gold(doc: Document, gold: Sequence[GoldToken]) -> Alignment:
    located = [g.span for g in gold if g.span is not None]
    index = [i for i, g in enumerate(gold) if g.span is not None]
    alignment = align_tokens([(t.begin, t.end) for t in doc.tokens], located, len(doc.text))
    # map located positions back to gold indices; unlocated gold words become lone groups
    groups = [AlignmentGroup(g.kind, g.system, tuple(index[k] for k in g.gold))
              for g in alignment.groups]
    groups += [AlignmentGroup("mismatched", (), (i,)) for i, g in enumerate(gold) if g.span is None]
    return Alignment(groups)


@dataclass(frozen=True)
class Score:
    task: str
    correct: int
    total: int

    @property
    def accuracy(self) -> float:
        return self.correct / self.total if self.total else 0.0


def _score(task: str, doc: Document, gold_sents: Sequence[ConlluSentence],
           same: Callable[[object, GoldToken], bool]) -> Score:
    gold = gold_tokens(doc.text, gold_sents)
    if not gold:
        raise EmptyGold("gold data has no tokens")
    exact = align_to_gold(doc, gold).exact()
    correct = sum(1 for gi, si in exact.items() if same(doc.tokens[si], gold[gi]))
    return Score(task, correct, len(gold))


def pos_score(doc: Document, gold: Sequence[ConlluSentence],
              mapping: Callable[[str], str] | Mapping[str, str] = coarse_map) -> Score:
    to_coarse = mapping.__getitem__ if isinstance(mapping, Mapping) else mapping

    def same(tok, g):
        return tok.pos is not None and to_coarse(tok.pos) == to_coarse(g.upos)

    return _score("pos", doc, gold, same)


def lemma_score(doc: Document, gold: Sequence[ConlluSentence]) -> Score:
    def same(tok, g):
        lemma = tok.lemma
        if lemma is None:
            return False
        # sentence-initial capitalization is not lexical, except for proper nouns
        if g.position == 0 and g.upos != "PROPN":
            return lemma.lower() == g.lemma.lower()
        return lemma == g.lemma

    return _score("lemma", doc, gold, same)


def eval_pos(doc: Document, gold: Sequence[ConlluSentence],
             mapping: Callable[[str], str] | Mapping[str, str] = coarse_map) -> float:
    """Coarse-tag accuracy over gold tokens."""
    return pos_score(doc, gold, mapping).accuracy


def eval_lemma(doc: Document, gold: Sequence[ConlluSentence]) -> float:
    return lemma_score(doc, gold).accuracy


def gold_document(gold: Sequence[ConlluSentence]) -> Document:
    """A tokenized document holding exactly the gold word boundaries."""
    return Document.from_sentences(s.forms for s in gold)


def raw_text(gold: Sequence[ConlluSentence]) -> str:
    """Reconstruct running text from gold surface tokens and SpaceAfter=No marks."""
    lines = []
    for sent in gold:
        parts = []
        covered = 0
        ranges = {lo: (hi, row) for lo, hi, row in sent.ranges()}
        for row in sent.words():
            ident = int(row[0])
            if ident <= covered:
                continue
            if ident in ranges:
                covered, row = ranges[ident]
            parts.append(row[1])
            if "SpaceAfter=No" not in row[9].split("|"):
                parts.append(" ")
        lines.append("".join(parts).rstrip(" "))
    return "\n".join(lines)
