"""Throughput benchmark: warmup runs, then N measured single-threaded runs.

Each stage times only its own annotators; the inputs they need (tokens,
tags) are produced once beforehand, untimed.  Memo caches of the stage are
cleared before every run so each run starts cold; repetition inside one run
(frequent words) still benefits from caching, as it would in production.
"""

from __future__ import annotations

import os
import platform
import random
import re
import statistics
import time
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .annotators import standard_pipeline
from .pipeline import Document
from .tokenizer import Tokenizer

STAGES = ("tokenize", "pos", "lemma", "full")


@dataclass
class BenchReport:
    stage: str
    runs: list[tuple[float, int]]  # (wall seconds, tokens) per measured run
    warmup: int
    env: str = ""

    @property
    def mean_seconds(self) -> float:
        return statistics.fmean(t for t, _ in self.runs) if self.runs else 0.0

    @property
    def tokens(self) -> int:
        return self.runs[0][1] if self.runs else 0

    @property
    def tokens_per_sec(self) -> float:
        mean = self.mean_seconds
        return self.tokens / mean if self.tokens and mean > 0 else 0.0

    def to_tsv(self) -> str:
        lines = [f"# env\t{self.env}",
                 "stage\truns\twarmup\ttokens\tmean_seconds\ttokens_per_sec",
                 f"{self.stage}\t{len(self.runs)}\t{self.warmup}\t{self.tokens}\t"
                 f"{self.mean_seconds:.6f}\t{self.tokens_per_sec:.1f}",
                 "run\tseconds\ttokens\ttokens_per_sec"]
        for k, (secs, toks) in enumerate(self.runs, 1):
            rate = toks / secs if secs > 0 else 0.0
            lines.append(f"{k}\t{secs:.6f}\t{toks}\t{rate:.1f}")
        return "\n".join(lines) + "\n"


def environment_note() -> str:
    cpu = platform.processor() or platform.machine()
    try:
        with open("/proc/cpuinfo", encoding="utf-8") as fh:
            for line in fh:
                if line.startswith("model name"):
                    cpu = line.split(":", 1)[1].strip()
                    break
    except OSError:
        pass
    return (f"python {platform.python_version()} on {platform.system()} {platform.release()}; "
            f"cpu {cpu}; {os.cpu_count()} logical core(s) visible; numpy {np.__version__}; "
            f"single-threaded; caches cleared before each run")


@dataclass
class Stage:
    """``prepare`` turns paragraphs into run inputs (untimed); ``run`` returns a token count."""

    name: str
    prepare: Callable[[list[str]], object]
    run: Callable[[object], int]
    reset: Callable[[], None] = field(default=lambda: None)


def paragraphs(text: str) -> list[str]:
    return [p for p in re.split(r"\n\s*\n", text) if p.strip()]


def make_stage(name: str, properties: Mapping[str, Mapping[str, str]] | None = None) -> Stage:
    props = {k: dict(v) for k, v in (properties or {}).items()}
    full = standard_pipeline(properties=props)
    tok, morph, pos, lemma = (full.annotator(n) for n in ("tokenize", "morph", "pos", "lemma"))

    def reset():
        morph.clear_cache()
        pos.model.clear_cache()

    if name == "tokenize":
        def run(paras):
            return sum(len(_tokenize(tok, p).tokens) for p in paras)
        return Stage(name, list, run, reset)
    if name == "pos":
        def run(docs):
            for d in docs:
                pos.annotate(d)
            return sum(len(d.tokens) for d in docs)
        return Stage(name, lambda paras: [_tokenize(tok, p) for p in paras], run, reset)
    if name == "lemma":
        def prep(paras):
            docs = [_tokenize(tok, p) for p in paras]
            for d in docs:
                pos.annotate(d)
            return docs

        def run(docs):
            for d in docs:
                morph.annotate(d)
                lemma.annotate(d)
            return sum(len(d.tokens) for d in docs)
        return Stage(name, prep, run, reset)
    if name == "full":
        def run(paras):
            return sum(len(full.annotate(p).tokens) for p in paras)
        return Stage(name, list, run, reset)
    raise ValueError(f"unknown stage {name!r}; expected one of {', '.join(STAGES)}")


def _tokenize(tok, text: str) -> Document:
    doc = Document(text)
    tok.annotate(doc)
    return doc


def bench(stage: Stage, text: str, runs: int = 10, warmup: int = 2) -> BenchReport:
    """Time ``stage`` over ``text`` (split into blank-line separated paragraphs)."""
    if runs < 1:
        raise ValueError("runs must be at least 1")
    inputs = stage.prepare(paragraphs(text))
    for _ in range(warmup):
        stage.reset()
        stage.run(inputs)
    measured = []
    for _ in range(runs):
        stage.reset()
        start = time.perf_counter()
        n = stage.run(inputs)
        measured.append((time.perf_counter() - start, n))
    return BenchReport(stage.name, measured, warmup, environment_note())


# --- synthetic corpus -------------------------------------------------------

_CONSONANTS = "bcdfglmnprstvz"
_VOWELS = "aeiou"


def make_corpus(n_tokens: int, seed: int = 7, noise: float = 0.15,
                sentences: list[str] | None = None, per_paragraph: int = 5) -> str:
    """Plain text of at least ``n_tokens`` tokens built from desk sentences.

    A ``noise`` share of lowercase words of five or more letters is replaced
    by a pseudo-word that keeps the last three letters (so suffix features
    still fire) but is otherwise random, which keeps lookup caches honest.
    """
    if sentences is None:
        from .resources import resource_path
        sentences = [s for s in resource_path("desk_text.txt").read_text("utf-8").splitlines() if s]
    tokenizer = Tokenizer()
    rng = random.Random(seed)
    paras: list[str] = []
    count = 0
    while count < n_tokens:
        chosen = []
        for _ in range(per_paragraph):
            s = rng.choice(sentences)
            chosen.append(re.sub(r"\b[a-zàèéìòù]{5,}\b", lambda m: _noisy(m.group(0), rng, noise), s))
        para = " ".join(chosen)
        count += len(tokenizer.tokenize(para))
        paras.append(para)
    return "\n\n".join(paras) + "\n"


def _noisy(word: str, rng: random.Random, noise: float) -> str:
    if rng.random() >= noise:
        return word
    syllables = "".join(rng.choice(_CONSONANTS) + rng.choice(_VOWELS) for _ in range(rng.randint(2, 3)))
    return syllables + word[-3:]
