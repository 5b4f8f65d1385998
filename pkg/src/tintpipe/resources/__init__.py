"""Bundled data files: tokenizer lists, tag and affix tables, desk models."""

from importlib import resources
from pathlib import Path


def resource_path(name: str) -> Path:
    return Path(str(resources.files(__name__).joinpath(name)))


def default_lexicon_path() -> Path:
    return resource_path("desk_lexicon.mlex")


def default_model_path() -> Path:
    return resource_path("desk_pos.posm")
