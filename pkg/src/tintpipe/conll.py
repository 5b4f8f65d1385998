"""CoNLL-U reading, CoNLL writing and the JSON document dump.

Offsets in the JSON dump count Unicode code points, like the Document model.
"""

from __future__ import annotations

import io
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable

from .errors import ParseError
from .pipeline import Document

COLUMNS = ("id", "form", "lemma", "upos", "xpos", "feats", "head", "deprel", "deps", "misc")
_RANGE = re.compile(r"^(\d+)-(\d+)$")
_EMPTY = re.compile(r"^\d+\.\d+$")


@dataclass
class ConlluSentence:
    rows: list[tuple[str, ...]]
    comments: list[str] = field(default_factory=list)

    def words(self) -> list[tuple[str, ...]]:
        """Plain word rows: no multiword ranges, no empty nodes."""
        return [r for r in self.rows if r[0].isdigit()]

    def __len__(self) -> int:
        return len(self.words())

    @property
    def forms(self) -> list[str]:
        return [r[1] for r in self.words()]

    def tagged_words(self) -> list[tuple[str, str]]:
        return [(r[1], r[3]) for r in self.words()]

    @property
    def text(self) -> str | None:
        for c in self.comments:
            key, sep, value = c.lstrip("#").partition("=")
            if sep and key.strip() == "text":
                return value.strip()
        return None

    def ranges(self) -> list[tuple[int, int, tuple[str, ...]]]:
        out = []
        for r in self.rows:
            m = _RANGE.match(r[0])
            if m:
                out.append((int(m.group(1)), int(m.group(2)), r))
        return out


def parse_conllu(text: str) -> list[ConlluSentence]:
    sentences: list[ConlluSentence] = []
    rows: list[tuple[str, ...]] = []
    comments: list[str] = []
    expected = 1

    def flush():
        nonlocal rows, comments, expected
        if rows:
            sentences.append(ConlluSentence(rows, comments))
        elif comments:
            raise ParseError(lineno, "comment lines without a sentence")
        rows, comments, expected = [], [], 1

    lineno = 0
    for lineno, line in enumerate(text.split("\n"), 1):
        line = line.rstrip("\r")
        if not line.strip():
            flush()
            continue
        if line.startswith("#"):
            if rows:
                raise ParseError(lineno, "comment inside a sentence")
            comments.append(line)
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ParseError(lineno, f"expected 10 columns, found {len(cols)}")
        ident = cols[0]
        if ident.isdigit():
            if int(ident) != expected:
                raise ParseError(lineno, f"word id {ident} out of sequence (expected {expected})")
            expected += 1
        elif _RANGE.match(ident):
            lo, hi = map(int, ident.split("-"))
            if lo != expected or hi < lo:
                raise ParseError(lineno, f"bad multiword range {ident}")
        elif not _EMPTY.match(ident):
            raise ParseError(lineno, f"bad id {ident!r}")
        if not cols[1]:
            raise ParseError(lineno, "empty form")
        rows.append(tuple(cols))
    flush()
    return sentences


def read_conllu(source: str | Path | IO[str]) -> list[ConlluSentence]:
    """Read a CoNLL-U file (path or open text handle); fails on the first bad line."""
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source.read()
    if text.startswith("﻿"):
        text = text[1:]
    return parse_conllu(text)


def render_conllu(sentences: Iterable[ConlluSentence]) -> str:
    out = io.StringIO()
    for s in sentences:
        for c in s.comments:
            out.write(c + "\n")
        for r in s.rows:
            out.write("\t".join(r) + "\n")
        out.write("\n")
    return out.getvalue()


def write_conll(doc: Document) -> str:
    """Ten-column rows per token, a blank line after each sentence."""
    out = io.StringIO()
    for sentence in doc.sentence_tokens():
        for k, tok in enumerate(sentence, 1):
            out.write(f"{k}\t{tok.surface}\t{tok.lemma or '_'}\t{tok.pos or '_'}\t_\t_\t_\t_\t_\t_\n")
        out.write("\n")
    return out.getvalue()


def document_dict(doc: Document) -> dict:
    tokens = []
    for tok in doc.tokens:
        entry = {"index": tok.index, "begin": tok.begin, "end": tok.end, "surface": tok.surface}
        if tok.is_abbreviation:
            entry["is_abbreviation"] = True
        if tok.pattern_kind:
            entry["pattern_kind"] = tok.pattern_kind
        ann = tok.annotations
        if "pos" in ann:
            entry["pos"] = ann["pos"]
        if "lemma" in ann:
            entry["lemma"] = ann["lemma"]
        if "morph" in ann:
            entry["morph"] = [a.to_dict() for a in ann["morph"]]
        tokens.append(entry)
    return {
        "text": doc.text,
        "sentences": [{"first": s.first, "last": s.last} for s in doc.sentences],
        "tokens": tokens,
    }


def write_json(doc: Document) -> str:
    return json.dumps(document_dict(doc), ensure_ascii=False, separators=(",", ":"))
