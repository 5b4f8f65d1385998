"""Greedy averaged-perceptron part-of-speech tagger.

Training is the classic averaged perceptron over hand-written feature
templates.  Decoding is left to right; at tagging time the feature weights
are regrouped by what they depend on (the word itself, each context word,
the two previous tags) so a sentence costs a handful of vector additions per
token instead of one dictionary probe per feature.
"""

from __future__ import annotations

import hashlib
import logging
import random
import struct
import zlib
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import EmptyCorpus, MissingGoldTag, ModelLoadError, ResourceLoadError, UnknownTag
from .pipeline import Document

log = logging.getLogger(__name__)

TEMPLATE_VERSION = 1
BOS = "<S>"
EOS = "</S>"

UPOS = ("ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM", "PART",
        "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X")

COARSE = {"NOUN": "N", "PROPN": "N", "VERB": "V", "AUX": "V", "ADV": "B", "ADJ": "A"}


def coarse_map(tag: str) -> str:
    """Collapse a UPOS tag to N, V, B, A or O."""
    if tag not in UPOS:
        raise UnknownTag(f"{tag!r} is not a UPOS tag")
    return COARSE.get(tag, "O")


def word_shape(word: str) -> str:
    out = []
    for ch in word:
        if ch.isupper():
            c = "X"
        elif ch.islower():
            c = "x"
        elif ch.isdigit():
            c = "d"
        else:
            c = ch
        if not out or out[-1] != c:
            out.append(c)
    return "".join(out)


def local_features(word: str) -> list[str]:
    """Features of the word alone."""
    low = word.lower()
    feats = ["bias", "w=" + word, "lw=" + low]
    for k in (1, 2, 3, 4):
        if len(low) >= k:
            feats.append(f"suf{k}={low[-k:]}")
    for k in (1, 2):
        if len(low) >= k:
            feats.append(f"pre{k}={low[:k]}")
    if any(ch.isdigit() for ch in word):
        feats.append("hasDigit=1")
    if "-" in word:
        feats.append("hasHyphen=1")
    if word[:1].isupper():
        feats.append("cap=1")
    feats.append("shape=" + word_shape(word))
    return feats


def _context_word(words: Sequence[str], j: int) -> str:
    if j < 0:
        return BOS
    if j >= len(words):
        return EOS
    return words[j].lower()


def extract_features(words: Sequence[str], i: int, prev_tags: Sequence[str]) -> list[str]:
    """Feature strings for position ``i`` given the tags already predicted."""
    feats = local_features(words[i])
    feats.append("w-1=" + _context_word(words, i - 1))
    feats.append("w-2=" + _context_word(words, i - 2))
    feats.append("w+1=" + _context_word(words, i + 1))
    feats.append("w+2=" + _context_word(words, i + 2))
    t1 = prev_tags[i - 1] if i >= 1 else BOS
    t2 = prev_tags[i - 2] if i >= 2 else BOS
    feats.append("t-1=" + t1)
    feats.append("t-2=" + t2)
    feats.append(f"t-2,t-1={t2},{t1}")
    return feats


@dataclass
class TaggerModel:
    tagset: list[str]
    weights: dict[str, dict[int, float]]
    template_version: int = TEMPLATE_VERSION
    epochs: int = 0
    corpus_checksum: bytes = b"\0" * 32
    train_accuracy: list[float] = field(default_factory=list)

    def __post_init__(self):
        self._compiled = _Compiled(self)

    def tag(self, words: Sequence[str], beam: int = 1) -> list[str]:
        return self._compiled.tag(words, beam)

    def clear_cache(self) -> None:
        self._compiled.clear_cache()

    def scores(self, features: Iterable[str]) -> np.ndarray:
        """Reference scorer: plain sum of feature weights."""
        out = np.zeros(len(self.tagset))
        for f in features:
            for t, w in self.weights.get(f, {}).items():
                out[t] += w
        return out

    def __eq__(self, other):
        if not isinstance(other, TaggerModel):
            return NotImplemented
        return (self.tagset == other.tagset and self.weights == other.weights
                and self.template_version == other.template_version
                and self.epochs == other.epochs and self.corpus_checksum == other.corpus_checksum
                and self.train_accuracy == other.train_accuracy)


class _Compiled:
    """Weights regrouped by dependency for fast greedy decoding."""

    _CACHE_LIMIT = 200_000

    def __init__(self, model: TaggerModel):
        n = len(model.tagset)
        self.n = n
        self.tagset = list(model.tagset)
        rows: dict[str, np.ndarray] = {}
        for feat, tw in model.weights.items():
            row = np.zeros(n)
            for t, w in tw.items():
                row[t] = w
            rows[feat] = row
        self.rows = rows
        self.zero = np.zeros(n)
        self.local_cache: dict[str, np.ndarray] = {}
        self.ctx = {}
        for name in ("w-1=", "w-2=", "w+1=", "w+2="):
            self.ctx[name] = {f[len(name):]: r for f, r in rows.items() if f.startswith(name)}
        # tag context table indexed [t-2][t-1], index n stands for the boundary
        labels = self.tagset + [BOS]
        table = np.zeros((n + 1, n + 1, n))
        zero = self.zero
        for a, t2 in enumerate(labels):
            r2 = rows.get("t-2=" + t2, zero)
            for b, t1 in enumerate(labels):
                table[a, b] = rows.get("t-1=" + t1, zero) + r2 + rows.get(f"t-2,t-1={t2},{t1}", zero)
        self.tag_table = table

    def clear_cache(self) -> None:
        self.local_cache = {}

    def local(self, word: str) -> np.ndarray:
        vec = self.local_cache.get(word)
        if vec is None:
            vec = self.zero.copy()
            rows = self.rows
            for f in local_features(word):
                r = rows.get(f)
                if r is not None:
                    vec += r
            if len(self.local_cache) >= self._CACHE_LIMIT:
                self.local_cache = {}
            self.local_cache[word] = vec
        return vec

    def static_scores(self, words: Sequence[str]) -> np.ndarray:
        """Per-position scores from every feature except the tag history."""
        lows = [BOS, BOS] + [w.lower() for w in words] + [EOS, EOS]
        zero = self.zero
        c = self.ctx
        m1, m2, p1, p2 = c["w-1="], c["w-2="], c["w+1="], c["w+2="]
        out = np.empty((len(words), self.n))
        for i, w in enumerate(words):
            j = i + 2
            out[i] = (self.local(w) + m1.get(lows[j - 1], zero) + m2.get(lows[j - 2], zero)
                      + p1.get(lows[j + 1], zero) + p2.get(lows[j + 2], zero))
        return out

    def tag(self, words: Sequence[str], beam: int = 1) -> list[str]:
        if not words:
            return []
        static = self.static_scores(words)
        table = self.tag_table
        n = self.n
        if beam <= 1:
            out = []
            t2 = t1 = n
            for i in range(len(words)):
                best = int(np.argmax(static[i] + table[t2, t1]))
                out.append(best)
                t2, t1 = t1, best
            return [self.tagset[t] for t in out]
        return [self.tagset[t] for t in self._beam(static, beam)]

    def _beam(self, static: np.ndarray, width: int) -> list[int]:
        n = self.n
        beams: list[tuple[float, tuple[int, ...]]] = [(0.0, ())]
        for i in range(len(static)):
            cands = []
            for score, seq in beams:
                t1 = seq[-1] if seq else n
                t2 = seq[-2] if len(seq) > 1 else n
                s = static[i] + self.tag_table[t2, t1]
                for t in range(n):
                    cands.append((score + s[t], seq + (t,)))
            # stable sort keeps tagset order among equal scores
            cands.sort(key=lambda c: -c[0])
            beams = cands[:width]
        return list(beams[0][1])


def tag_sentence(model: TaggerModel, tokens: Sequence[str], beam: int = 1) -> list[str]:
    return model.tag(tokens, beam)


def corpus_checksum(corpus: Sequence[Sequence[tuple[str, str]]]) -> bytes:
    h = hashlib.sha256()
    for sent in corpus:
        for word, tag in sent:
            h.update(word.encode("utf-8") + b"\t" + tag.encode("utf-8") + b"\n")
        h.update(b"\n")
    return h.digest()


def train(corpus: Sequence[Sequence[tuple[str, str]]], epochs: int = 10, seed: int = 1) -> TaggerModel:
    """Train on (word, UPOS) sentences.

    Sentence order is shuffled every epoch with ``random.Random(seed)``, so the
    result is fully determined by (corpus, epochs, seed).
    """
    if not corpus or not any(corpus):
        raise EmptyCorpus("training corpus has no tokens")
    counts: Counter[str] = Counter()
    for s, sent in enumerate(corpus):
        for i, (word, tag) in enumerate(sent):
            if not tag or tag == "_":
                raise MissingGoldTag(s, i)
            counts[tag] += 1
    tagset = sorted(counts, key=lambda t: (-counts[t], t))
    index = {t: k for k, t in enumerate(tagset)}
    n = len(tagset)

    weights: dict[str, dict[int, float]] = {}
    totals: dict[tuple[str, int], float] = {}
    stamps: dict[tuple[str, int], int] = {}
    step = 0

    def update(feat: str, t: int, delta: float) -> None:
        key = (feat, t)
        fw = weights.setdefault(feat, {})
        w = fw.get(t, 0.0)
        totals[key] = totals.get(key, 0.0) + (step - stamps.get(key, 0)) * w
        stamps[key] = step
        fw[t] = w + delta

    rng = random.Random(seed)
    order = list(range(len(corpus)))
    history = []
    for epoch in range(epochs):
        rng.shuffle(order)
        correct = total = 0
        for s in order:
            sent = corpus[s]
            words = [w for w, _ in sent]
            prev: list[str] = []
            for i, (_, gold) in enumerate(sent):
                feats = extract_features(words, i, prev)
                scores = [0.0] * n
                for f in feats:
                    fw = weights.get(f)
                    if fw:
                        for t, w in fw.items():
                            scores[t] += w
                guess = max(range(n), key=scores.__getitem__)
                g = index[gold]
                step += 1
                if guess != g:
                    for f in feats:
                        update(f, g, 1.0)
                        update(f, guess, -1.0)
                else:
                    correct += 1
                total += 1
                prev.append(tagset[guess])
        acc = correct / total
        history.append(acc)
        log.info("epoch %d: training accuracy %.4f", epoch + 1, acc)

    averaged: dict[str, dict[int, float]] = {}
    if step:
        for feat, fw in weights.items():
            row = {}
            for t, w in fw.items():
                key = (feat, t)
                # weight w has been in force from instance stamps[key] through the last one
                total_w = totals.get(key, 0.0) + (step - stamps[key] + 1) * w
                avg = total_w / step
                if avg != 0.0:
                    row[t] = avg
            if row:
                averaged[feat] = row
    return TaggerModel(tagset, averaged, TEMPLATE_VERSION, epochs, corpus_checksum(corpus), history)


# --- persistence -----------------------------------------------------------

MAGIC = b"POSM"
VERSION = 1
_HEAD = struct.Struct("<4sHHI32s")
_U16 = struct.Struct("<H")
_U32 = struct.Struct("<I")
_F64 = struct.Struct("<d")
_ENTRY = struct.Struct("<Hd")


def dumps(model: TaggerModel) -> bytes:
    out = bytearray(_HEAD.pack(MAGIC, VERSION, model.template_version, model.epochs,
                               model.corpus_checksum))
    out += _U16.pack(len(model.train_accuracy))
    for acc in model.train_accuracy:
        out += _F64.pack(acc)
    out += _U16.pack(len(model.tagset))
    for tag in model.tagset:
        b = tag.encode("utf-8")
        out += _U16.pack(len(b)) + b
    feats = sorted((f.encode("utf-8"), f) for f in model.weights)
    out += _U32.pack(len(feats))
    for fb, f in feats:
        row = sorted(model.weights[f].items())
        out += _U16.pack(len(fb)) + fb + _U16.pack(len(row))
        for t, w in row:
            out += _ENTRY.pack(t, w)
    out += _U32.pack(zlib.crc32(out))
    return bytes(out)


def loads(data: bytes) -> TaggerModel:
    if len(data) < _HEAD.size + 4:
        raise ModelLoadError("model file truncated")
    if zlib.crc32(data[:-4]) != _U32.unpack_from(data, len(data) - 4)[0]:
        magic = data[:4]
        if magic != MAGIC:
            raise ModelLoadError(f"bad magic {magic!r}")
        raise ModelLoadError("model checksum mismatch (truncated or corrupt file)")
    magic, version, templates, epochs, checksum = _HEAD.unpack_from(data, 0)
    if magic != MAGIC:
        raise ModelLoadError(f"bad magic {magic!r}")
    if version != VERSION:
        raise ModelLoadError(f"unsupported model version {version}")
    if templates != TEMPLATE_VERSION:
        raise ModelLoadError(f"model uses feature templates v{templates}, expected v{TEMPLATE_VERSION}")
    try:
        pos = _HEAD.size
        (nacc,) = _U16.unpack_from(data, pos)
        pos += 2
        accs = [_F64.unpack_from(data, pos + 8 * k)[0] for k in range(nacc)]
        pos += 8 * nacc
        (ntags,) = _U16.unpack_from(data, pos)
        pos += 2
        tagset = []
        for _ in range(ntags):
            (ln,) = _U16.unpack_from(data, pos)
            tagset.append(data[pos + 2:pos + 2 + ln].decode("utf-8"))
            pos += 2 + ln
        (nfeat,) = _U32.unpack_from(data, pos)
        pos += 4
        weights = {}
        for _ in range(nfeat):
            (ln,) = _U16.unpack_from(data, pos)
            feat = data[pos + 2:pos + 2 + ln].decode("utf-8")
            pos += 2 + ln
            (nnz,) = _U16.unpack_from(data, pos)
            pos += 2
            row = {}
            for _ in range(nnz):
                t, w = _ENTRY.unpack_from(data, pos)
                pos += _ENTRY.size
                if t >= ntags:
                    raise ModelLoadError(f"weight for tag {t} outside tagset")
                row[t] = w
            weights[feat] = row
        if pos != len(data) - 4:
            raise ModelLoadError("trailing bytes in model file")
    except (struct.error, UnicodeDecodeError) as exc:
        raise ModelLoadError(f"malformed model file: {exc}") from exc
    return TaggerModel(tagset, weights, templates, epochs, checksum, accs)


def save_model(model: TaggerModel, path: str | Path) -> None:
    Path(path).write_bytes(dumps(model))


def load_model(path: str | Path) -> TaggerModel:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise ModelLoadError(f"cannot read model {path}: {exc}") from exc
    return loads(data)


class PosTagger:
    def __init__(self, model: TaggerModel, beam: int = 1):
        self.model = model
        self.beam = beam

    def annotate(self, doc: Document) -> None:
        tag = self.model.tag
        for sent in doc.sentence_tokens():
            tags = tag([t.surface for t in sent], self.beam)
            for tok, t in zip(sent, tags):
                tok.annotations["pos"] = t


def pos_annotator(properties: Mapping[str, str]) -> PosTagger:
    from .resources import default_model_path

    path = properties.get("model") or default_model_path()
    try:
        model = load_model(path)
    except ModelLoadError as exc:
        raise ResourceLoadError(str(exc)) from exc
    return PosTagger(model, int(properties.get("beam", "1")))
