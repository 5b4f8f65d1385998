"""The standard annotators and a registry preloaded with them."""

from __future__ import annotations

from typing import Iterable

from .lemmatizer import lemma_annotator
from .morph import morph_annotator
from .pipeline import (AnnotatorRegistry, AnnotatorSpec, Pipeline, PipelineConfig,
                       build_pipeline)
from .tagger import pos_annotator
from .tokenizer import tokenize_annotator

STANDARD_SPECS = {
    "tokenize": AnnotatorSpec("tokenize", frozenset({"text"}), frozenset({"tokens", "sentences"})),
    "morph": AnnotatorSpec("morph", frozenset({"tokens"}), frozenset({"morph"})),
    "pos": AnnotatorSpec("pos", frozenset({"tokens", "sentences"}), frozenset({"pos"})),
    "lemma": AnnotatorSpec("lemma", frozenset({"tokens", "sentences", "pos", "morph"}),
                           frozenset({"lemma"})),
}

_FACTORIES = {
    "tokenize": tokenize_annotator,
    "morph": morph_annotator,
    "pos": pos_annotator,
    "lemma": lemma_annotator,
}

DEFAULT_ANNOTATORS = ("tokenize", "morph", "pos", "lemma")


def default_registry() -> AnnotatorRegistry:
    registry = AnnotatorRegistry()
    for name, spec in STANDARD_SPECS.items():
        registry.register(spec, _FACTORIES[name])
    return registry


def standard_pipeline(annotators: Iterable[str] = DEFAULT_ANNOTATORS,
                      properties: dict[str, dict[str, str]] | None = None,
                      provided: Iterable[str] = ("text",)) -> Pipeline:
    """Build a pipeline of standard annotators with bundled default resources."""
    config = PipelineConfig(list(annotators), properties or {})
    return build_pipeline(default_registry(), config, provided)
