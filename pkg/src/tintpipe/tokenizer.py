"""Rule-based tokenizer and sentence splitter.

Tokenization runs in two passes.  The gross pass splits on whitespace and
detaches every punctuation character.  The merge pass glues adjacent
fragments back together when they spell an abbreviation from the list, match
one of the email/url/date/number patterns, or form a word-internal compound
(elided article, hyphenated word, dotted form, ellipsis).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Mapping

from .errors import ResourceLoadError
from .pipeline import PATTERN_KINDS, Document, SentenceSpan, Token

_CHUNK = re.compile(r"\S+")
_WORD = re.compile(r"\w+")
_GROSS = re.compile(r"\w+|[^\w\s]")

TERMINATORS = frozenset(".!?…")
# trailing material that stays with the sentence it closes
_CLOSERS = frozenset(")]}»”’")
_QUOTES = frozenset("\"'")
_APOSTROPHES = frozenset("'’")
_MAX_RUN = 64


@dataclass(frozen=True)
class AbbreviationList:
    entries: frozenset[str]
    case_sensitive: bool = False

    def __post_init__(self):
        for entry in self.entries:
            if not entry.endswith(".") or not any(ch.isalpha() for ch in entry):
                raise ValueError(f"bad abbreviation {entry!r}")
            if any(ch.isspace() for ch in entry):
                raise ValueError(f"abbreviation {entry!r} contains whitespace")
        keys = self.entries if self.case_sensitive else {e.lower() for e in self.entries}
        object.__setattr__(self, "_keys", frozenset(keys))
        object.__setattr__(self, "max_len", max((len(e) for e in self.entries), default=0))

    def __contains__(self, text: str) -> bool:
        return (text if self.case_sensitive else text.lower()) in self._keys

    def __len__(self) -> int:
        return len(self.entries)

    @classmethod
    def parse(cls, source: str, case_sensitive: bool = False) -> "AbbreviationList":
        entries = set()
        for lineno, raw in enumerate(source.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if not line.endswith(".") or not any(ch.isalpha() for ch in line) \
                    or any(ch.isspace() for ch in line):
                raise ResourceLoadError(f"abbreviation line {lineno}: bad entry {line!r}")
            entries.add(line)
        return cls(frozenset(entries), case_sensitive)

    @classmethod
    def load(cls, path: str | Path | None = None, case_sensitive: bool = False) -> "AbbreviationList":
        return cls.parse(_read_resource(path, "abbreviations.txt"), case_sensitive)


@dataclass(frozen=True)
class PatternSet:
    patterns: tuple[tuple[str, str], ...]

    def __post_init__(self):
        compiled = []
        for kind, source in self.patterns:
            if kind not in PATTERN_KINDS:
                raise ValueError(f"unknown pattern kind {kind!r}")
            compiled.append((kind, re.compile(source)))
        object.__setattr__(self, "_compiled", tuple(compiled))
        any_source = "|".join(f"(?:{src})" for _, src in self.patterns) or r"(?!)"
        object.__setattr__(self, "_any", re.compile(any_source))

    def fullmatch(self, text: str) -> str | None:
        for kind, rx in self._compiled:
            if rx.fullmatch(text):
                return kind
        return None

    def search_any(self, text: str) -> bool:
        return self._any.search(text) is not None

    @classmethod
    def parse(cls, source: str) -> "PatternSet":
        pats = []
        for lineno, raw in enumerate(source.splitlines(), 1):
            if not raw.strip() or raw.lstrip().startswith("#"):
                continue
            kind, sep, regex = raw.partition("\t")
            if not sep or kind.strip() not in PATTERN_KINDS:
                raise ResourceLoadError(f"pattern line {lineno}: expected kind<TAB>regex")
            try:
                re.compile(regex)
            except re.error as exc:
                raise ResourceLoadError(f"pattern line {lineno}: {exc}") from exc
            pats.append((kind.strip(), regex))
        return cls(tuple(pats))

    @classmethod
    def load(cls, path: str | Path | None = None) -> "PatternSet":
        return cls.parse(_read_resource(path, "patterns.tsv"))


def _read_resource(path, default_name: str) -> str:
    try:
        if path is None:
            return resources.files("tintpipe.resources").joinpath(default_name).read_text("utf-8")
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ResourceLoadError(f"cannot read {path or default_name}: {exc}") from exc


def gross_tokenize(text: str) -> list[tuple[int, int]]:
    """Split on whitespace and detach every punctuation character."""
    return [m.span() for m in _GROSS.finditer(text)]


def merge_tokens(proto: list[tuple[int, int]], text: str, abbrevs: AbbreviationList,
                 patterns: PatternSet) -> list[Token]:
    tokens: list[Token] = []
    n = len(proto)
    i = 0
    while i < n:
        # collect the whitespace-free chunk starting at i
        j = i + 1
        while j < n and proto[j][0] == proto[j - 1][1]:
            j += 1
        _merge_chunk(proto[i:j], text, abbrevs, patterns, tokens)
        i = j
    return tokens


def _merge_chunk(chunk, text, abbrevs, patterns, out: list[Token]) -> None:
    n = len(chunk)
    begin, end = chunk[0][0], chunk[-1][1]
    if n == 1:
        out.append(_plain(len(out), begin, end, text, patterns))
        return
    chunk_text = text[begin:end]
    # whole chunk first: bounded search for the common case
    if chunk_text in abbrevs:
        out.append(Token(len(out), begin, end, chunk_text, is_abbreviation=True))
        return
    has_pattern = patterns.search_any(chunk_text)
    if has_pattern:
        kind = patterns.fullmatch(chunk_text)
        if kind:
            out.append(Token(len(out), begin, end, chunk_text, pattern_kind=kind))
            return

    pieces: list[tuple[int, int, bool, str | None]] = []
    i = 0
    while i < n:
        hit = _longest_run(chunk, i, text, abbrevs, patterns, has_pattern)
        if hit is None:
            pieces.append((chunk[i][0], chunk[i][1], False, None))
            i += 1
        else:
            j, is_abbr, kind = hit
            pieces.append((chunk[i][0], chunk[j][1], is_abbr, kind))
            i = j + 1
    for b, e, is_abbr, kind in _join_compounds(pieces, text):
        if is_abbr or kind:
            out.append(Token(len(out), b, e, text[b:e], is_abbr, kind))
        else:
            out.append(_plain(len(out), b, e, text, patterns))


def _longest_run(chunk, i, text, abbrevs, patterns, has_pattern):
    begin = chunk[i][0]
    last = min(len(chunk) - 1, i + _MAX_RUN)
    for j in range(last, i, -1):
        end = chunk[j][1]
        if text[end - 1] == "." and end - begin <= abbrevs.max_len and text[begin:end] in abbrevs:
            return j, True, None
        if has_pattern:
            kind = patterns.fullmatch(text[begin:end])
            if kind:
                return j, False, kind
    return None


def _is_word(text, b, e) -> bool:
    return _WORD.fullmatch(text, b, e) is not None


def _join_compounds(pieces, text):
    """Word-internal joins: elision (l'), hyphen and dot compounds, ellipsis."""
    out = []
    n = len(pieces)
    i = 0
    while i < n:
        b, e, is_abbr, kind = pieces[i]
        if is_abbr or kind:
            out.append(pieces[i])
            i += 1
            continue
        if _is_word(text, b, e):
            # elided article or preposition: l'acqua -> l' acqua
            if i + 2 < n and text[pieces[i + 1][0]] in _APOSTROPHES \
                    and pieces[i + 1][1] - pieces[i + 1][0] == 1 \
                    and _plain_word(pieces[i + 2], text):
                out.append((b, pieces[i + 1][1], False, None))
                i += 2
                continue
            # hyphen or dot compound: nord-est, c.so, dott.ssa
            j = i
            while j + 2 < n and text[pieces[j + 1][0]:pieces[j + 1][1]] in ("-", ".") \
                    and _plain_word(pieces[j + 2], text):
                j += 2
            if j > i:
                out.append((b, pieces[j][1], False, None))
                i = j + 1
                continue
        elif text[b:e] == ".":
            j = i
            while j + 1 < n and text[pieces[j + 1][0]:pieces[j + 1][1]] == ".":
                j += 1
            if j > i:
                out.append((b, pieces[j][1], False, None))
                i = j + 1
                continue
        out.append(pieces[i])
        i += 1
    return out


def _plain_word(piece, text) -> bool:
    b, e, is_abbr, kind = piece
    return not is_abbr and not kind and _is_word(text, b, e)


def _plain(index, begin, end, text, patterns) -> Token:
    surface = text[begin:end]
    kind = patterns.fullmatch(surface) if surface[0].isdigit() else None
    return Token(index, begin, end, surface, pattern_kind=kind)


def split_sentences(tokens: list[Token], text: str, abbrevs: AbbreviationList | None = None
                    ) -> list[SentenceSpan]:
    """Sentence boundaries after terminal punctuation not flagged as abbreviation.

    Consecutive terminators and closing brackets or quotes attached to the
    terminator stay in the sentence they close.
    """
    spans: list[SentenceSpan] = []
    n = len(tokens)
    first = 0
    i = 0
    while i < n:
        tok = tokens[i]
        surface = tok.surface
        if not tok.is_abbreviation and surface[-1] in TERMINATORS and tok.pattern_kind is None:
            j = i + 1
            while j < n and _continues(tokens[j], tokens[j - 1]):
                j += 1
            spans.append(SentenceSpan(first, j - 1))
            first = j
            i = j
            continue
        i += 1
    if first < n:
        spans.append(SentenceSpan(first, n - 1))
    return spans


def _continues(tok: Token, prev: Token) -> bool:
    s = tok.surface
    if len(s) == 1 and (s in TERMINATORS or s in _CLOSERS):
        return True
    if s == "...":
        return True
    return s in _QUOTES and tok.begin == prev.end


class Tokenizer:
    """Immutable tokenizer bound to one abbreviation list and pattern set."""

    def __init__(self, abbrevs: AbbreviationList | None = None, patterns: PatternSet | None = None):
        self.abbrevs = abbrevs if abbrevs is not None else AbbreviationList.load()
        self.patterns = patterns if patterns is not None else PatternSet.load()

    def tokenize(self, text: str) -> list[Token]:
        tokens: list[Token] = []
        word = _WORD.fullmatch
        patterns = self.patterns
        for m in _CHUNK.finditer(text):
            b, e = m.span()
            chunk = m.group()
            if word(chunk):
                kind = patterns.fullmatch(chunk) if chunk[0].isdigit() else None
                tokens.append(Token(len(tokens), b, e, chunk, pattern_kind=kind))
            else:
                proto = [(b + pm.start(), b + pm.end()) for pm in _GROSS.finditer(chunk)]
                _merge_chunk(proto, text, self.abbrevs, patterns, tokens)
        return tokens

    def split(self, tokens: list[Token], text: str) -> list[SentenceSpan]:
        return split_sentences(tokens, text, self.abbrevs)

    def annotate(self, doc: Document) -> None:
        tokens = self.tokenize(doc.text)
        doc.tokens = tokens
        doc.sentences = self.split(tokens, doc.text)


def tokenize_annotator(properties: Mapping[str, str]) -> Tokenizer:
    case_sensitive = properties.get("abbrevCaseSensitive", "false").lower() == "true"
    abbrevs = AbbreviationList.load(properties.get("abbrevFile"), case_sensitive)
    extra = properties.get("extraAbbrevFile")
    if extra:
        more = AbbreviationList.load(extra, case_sensitive)
        abbrevs = AbbreviationList(abbrevs.entries | more.entries, case_sensitive)
    return Tokenizer(abbrevs, PatternSet.load(properties.get("patternFile")))
