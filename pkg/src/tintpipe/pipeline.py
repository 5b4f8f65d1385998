"""Document model, annotator registry and the pipeline executor.

A pipeline is an ordered list of annotators.  Each annotator declares the
capabilities it ``requires`` and ``provides``; the executor validates the
order given by the user and never reorders it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Iterable, Mapping, Protocol

from .errors import (
    AnnotatorFailure,
    DuplicateAnnotator,
    LayerViolation,
    ResourceLoadError,
    UnknownAnnotator,
    UnsatisfiedRequirement,
)

log = logging.getLogger(__name__)

PATTERN_KINDS = ("email", "url", "number", "date")


class Token:
    """A span of the source text plus its annotation layers.

    Offsets count Unicode code points, ``end`` is exclusive.
    """

    __slots__ = ("index", "begin", "end", "surface", "is_abbreviation",
                 "pattern_kind", "annotations")

    def __init__(self, index: int, begin: int, end: int, surface: str,
                 is_abbreviation: bool = False, pattern_kind: str | None = None):
        self.index = index
        self.begin = begin
        self.end = end
        self.surface = surface
        self.is_abbreviation = is_abbreviation
        self.pattern_kind = pattern_kind
        self.annotations: dict[str, Any] = {}

    @property
    def pos(self) -> str | None:
        return self.annotations.get("pos")

    @pos.setter
    def pos(self, value: str) -> None:
        self.annotations["pos"] = value

    @property
    def lemma(self) -> str | None:
        return self.annotations.get("lemma")

    @lemma.setter
    def lemma(self, value: str) -> None:
        self.annotations["lemma"] = value

    @property
    def morph(self) -> list | None:
        return self.annotations.get("morph")

    @morph.setter
    def morph(self, value: list) -> None:
        self.annotations["morph"] = value

    def __repr__(self) -> str:
        return f"Token({self.index}, {self.begin}, {self.end}, {self.surface!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Token):
            return NotImplemented
        return (self.index, self.begin, self.end, self.surface,
                self.is_abbreviation, self.pattern_kind, self.annotations) == \
            (other.index, other.begin, other.end, other.surface,
             other.is_abbreviation, other.pattern_kind, other.annotations)


@dataclass(frozen=True)
class SentenceSpan:
    first: int
    last: int  # inclusive

    def __len__(self) -> int:
        return self.last - self.first + 1


@dataclass
class Document:
    text: str
    tokens: list[Token] = field(default_factory=list)
    sentences: list[SentenceSpan] = field(default_factory=list)
    meta: dict[str, str] = field(default_factory=dict)

    def sentence_tokens(self) -> Iterable[list[Token]]:
        """Yield the tokens of each sentence; the whole token list if unsplit."""
        if not self.sentences:
            if self.tokens:
                yield self.tokens
            return
        for span in self.sentences:
            yield self.tokens[span.first:span.last + 1]

    @classmethod
    def from_sentences(cls, sentences: Iterable[Iterable[str]]) -> "Document":
        """Build a tokenized document from pre-split words.

        Words are joined by single spaces and sentences by newlines, so
        offsets are well defined and re-slice to the word forms.
        """
        parts: list[str] = []
        tokens: list[Token] = []
        spans: list[SentenceSpan] = []
        pos = 0
        for sentence in sentences:
            words = list(sentence)
            if not words:
                continue
            if parts:
                parts.append("\n")
                pos += 1
            first = len(tokens)
            for k, word in enumerate(words):
                if not word or any(ch.isspace() for ch in word):
                    raise ValueError(f"word form {word!r} is empty or contains whitespace")
                if k:
                    parts.append(" ")
                    pos += 1
                tokens.append(Token(len(tokens), pos, pos + len(word), word))
                parts.append(word)
                pos += len(word)
            spans.append(SentenceSpan(first, len(tokens) - 1))
        return cls("".join(parts), tokens, spans)

    def check_invariants(self) -> None:
        """Raise AssertionError when the document is not well formed."""
        prev_end = 0
        for i, tok in enumerate(self.tokens):
            assert tok.index == i, f"token {i} has index {tok.index}"
            assert tok.begin < tok.end, f"empty token {tok!r}"
            assert tok.begin >= prev_end, f"token {tok!r} overlaps its predecessor"
            assert self.text[tok.begin:tok.end] == tok.surface, f"bad offsets for {tok!r}"
            prev_end = tok.end
        if self.sentences:
            expected = 0
            for span in self.sentences:
                assert span.first == expected and span.last >= span.first, \
                    f"sentence {span} does not continue the partition"
                expected = span.last + 1
            assert expected == len(self.tokens), "sentences do not cover all tokens"


@dataclass(frozen=True)
class AnnotatorSpec:
    name: str
    requires: frozenset[str]
    provides: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "requires", frozenset(self.requires))
        object.__setattr__(self, "provides", frozenset(self.provides))
        if not self.provides:
            raise ValueError(f"annotator {self.name!r} must provide at least one capability")


class Annotator(Protocol):
    def annotate(self, doc: Document) -> None: ...


AnnotatorFactory = Callable[[Mapping[str, str]], Annotator]


class AnnotatorRegistry:
    def __init__(self):
        self._entries: dict[str, tuple[AnnotatorSpec, AnnotatorFactory]] = {}

    def register(self, spec: AnnotatorSpec, factory: AnnotatorFactory) -> "AnnotatorRegistry":
        if spec.name in self._entries:
            raise DuplicateAnnotator(f"annotator {spec.name!r} is already registered")
        self._entries[spec.name] = (spec, factory)
        return self

    def lookup(self, name: str) -> tuple[AnnotatorSpec, AnnotatorFactory]:
        try:
            return self._entries[name]
        except KeyError:
            raise UnknownAnnotator(f"no annotator named {name!r}; "
                                   f"registered: {', '.join(sorted(self._entries))}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def names(self) -> list[str]:
        return list(self._entries)


def register_annotator(registry: AnnotatorRegistry, spec: AnnotatorSpec,
                       factory: AnnotatorFactory) -> AnnotatorRegistry:
    return registry.register(spec, factory)


@dataclass
class PipelineConfig:
    annotators: list[str]
    properties: dict[str, dict[str, str]] = field(default_factory=dict)

    @classmethod
    def parse(cls, source: str) -> "PipelineConfig":
        """Parse ``key = value`` lines; ``#`` starts a comment line."""
        annotators: list[str] = []
        props: dict[str, dict[str, str]] = {}
        for lineno, raw in enumerate(source.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ResourceLoadError(f"config line {lineno}: expected 'key = value'")
            key, value = key.strip(), value.strip()
            if key == "annotators":
                annotators = [a.strip() for a in value.split(",") if a.strip()]
            elif "." in key:
                name, _, sub = key.partition(".")
                props.setdefault(name, {})[sub] = value
            else:
                raise ResourceLoadError(f"config line {lineno}: unknown key {key!r}")
        return cls(annotators, props)

    @classmethod
    def from_file(cls, path: str | Path) -> "PipelineConfig":
        try:
            source = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise ResourceLoadError(f"cannot read config {path}: {exc}") from exc
        return cls.parse(source)


class Pipeline:
    """An immutable, validated sequence of annotators.

    ``annotate`` may be called concurrently from several threads.
    """

    def __init__(self, stages: list[tuple[AnnotatorSpec, Annotator]],
                 initial: frozenset[str] = frozenset({"text"}), check_layers: bool = False):
        self._stages = tuple(stages)
        self.initial = initial
        self.check_layers = check_layers

    @property
    def specs(self) -> list[AnnotatorSpec]:
        return [spec for spec, _ in self._stages]

    @property
    def names(self) -> list[str]:
        return [spec.name for spec, _ in self._stages]

    def annotator(self, name: str) -> Annotator:
        for spec, ann in self._stages:
            if spec.name == name:
                return ann
        raise UnknownAnnotator(name)

    def annotate(self, text: str) -> Document:
        return self.annotate_document(Document(text))

    def annotate_document(self, doc: Document) -> Document:
        for spec, ann in self._stages:
            before = _snapshot(doc) if self.check_layers else None
            saved = (doc.tokens, doc.sentences)
            try:
                ann.annotate(doc)
                if before is not None:
                    _verify_layers(doc, spec, before)
            except Exception as exc:
                _rollback(doc, spec, saved)
                log.debug("annotator %s failed", spec.name, exc_info=True)
                raise AnnotatorFailure(spec.name, exc, doc) from exc
        return doc


def build_pipeline(registry: AnnotatorRegistry, config: PipelineConfig,
                   provided: Iterable[str] = ("text",), check_layers: bool = False) -> Pipeline:
    """Instantiate the configured annotators after validating their order."""
    initial = frozenset(provided)
    available = set(initial)
    resolved: list[tuple[AnnotatorSpec, AnnotatorFactory]] = []
    seen: set[str] = set()
    for name in config.annotators:
        spec, factory = registry.lookup(name)
        if name in seen:
            raise DuplicateAnnotator(f"annotator {name!r} listed twice")
        seen.add(name)
        for req in sorted(spec.requires):
            if req not in available:
                raise UnsatisfiedRequirement(name, req)
        available |= spec.provides
        resolved.append((spec, factory))
    stages = [(spec, factory(config.properties.get(spec.name, {}))) for spec, factory in resolved]
    return Pipeline(stages, initial, check_layers)


_DOC_LAYERS = ("tokens", "sentences")


def _snapshot(doc: Document):
    return (id(doc.tokens), id(doc.sentences), len(doc.tokens), len(doc.sentences),
            [dict(t.annotations) for t in doc.tokens])


def _verify_layers(doc: Document, spec: AnnotatorSpec, before) -> None:
    tok_id, sent_id, ntok, nsent, layers = before
    if (id(doc.tokens) != tok_id or len(doc.tokens) != ntok) and "tokens" not in spec.provides:
        raise LayerViolation(f"{spec.name} rewrote tokens without providing them")
    if (id(doc.sentences) != sent_id or len(doc.sentences) != nsent) \
            and "sentences" not in spec.provides:
        raise LayerViolation(f"{spec.name} rewrote sentences without providing them")
    if "tokens" in spec.provides:
        return
    for tok, old in zip(doc.tokens, layers):
        for key, value in tok.annotations.items():
            if key not in spec.provides and (key not in old or old[key] is not value):
                raise LayerViolation(f"{spec.name} wrote undeclared layer {key!r}")
        for key in old:
            if key not in tok.annotations and key not in spec.provides:
                raise LayerViolation(f"{spec.name} removed layer {key!r}")


def _rollback(doc: Document, spec: AnnotatorSpec, saved) -> None:
    doc.tokens, doc.sentences = saved
    for tok in doc.tokens:
        for layer in spec.provides:
            tok.annotations.pop(layer, None)
