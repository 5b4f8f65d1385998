"""A modular Italian annotation pipeline: tokenization, morphology, POS, lemmas."""

from .annotators import default_registry, standard_pipeline
from .pipeline import (AnnotatorRegistry, AnnotatorSpec, Document, Pipeline, PipelineConfig,
                       SentenceSpan, Token, build_pipeline, register_annotator)

__all__ = [
    "AnnotatorRegistry", "AnnotatorSpec", "Document", "Pipeline", "PipelineConfig",
    "SentenceSpan", "Token", "build_pipeline", "default_registry", "register_annotator",
    "standard_pipeline",
]
__version__ = "0.1.0"
