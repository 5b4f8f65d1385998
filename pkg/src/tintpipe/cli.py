"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 processing error, 3 accuracy below
the ``--min`` threshold of ``eval``.
"""

from __future__ import annotations

import argparse
import io
import itertools
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Iterator, TextIO

from .errors import TintError

log = logging.getLogger("tintpipe")

EXIT_USAGE = 1
EXIT_ERROR = 2
EXIT_BELOW_MIN = 3
FORMATS = ("conll", "json")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tintpipe", description="Italian annotation pipeline: tokenize, morph, pos, lemma.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("annotate", help="annotate plain text")
    a.add_argument("--config", help="properties file (annotators = ..., name.key = value)")
    a.add_argument("--format", default="conll", help="output format: conll (default) or json")
    a.add_argument("--input", help="input text file (default: stdin)")
    a.add_argument("--output", help="output file (default: stdout)")
    a.add_argument("--threads", type=int, default=1, help="annotate chunks concurrently")
    a.add_argument("--global-offsets", action="store_true",
                   help="report JSON offsets relative to the whole input, not the chunk")

    c = sub.add_parser("compile-lexicon", help="compile a form/lemma/tag TSV lexicon into a store")
    c.add_argument("--input", required=True)
    c.add_argument("--output", required=True)

    t = sub.add_parser("train-pos", help="train the POS tagger on CoNLL-U data")
    t.add_argument("--train", required=True)
    t.add_argument("--dev")
    t.add_argument("--epochs", type=int, default=10)
    t.add_argument("--seed", type=int, default=1)
    t.add_argument("--out", required=True)

    e = sub.add_parser("eval", help="score POS or lemma accuracy against CoNLL-U gold")
    e.add_argument("--gold", required=True)
    e.add_argument("--task", required=True, choices=("pos", "lemma"))
    e.add_argument("--model", help="tagger model (default: bundled desk model)")
    e.add_argument("--lexicon", help="lexicon store (default: bundled desk lexicon)")
    e.add_argument("--config", help="properties file for further annotator settings")
    e.add_argument("--raw", action="store_true",
                   help="tokenize the reconstructed raw text instead of using gold token boundaries")
    e.add_argument("--min", type=float, help="exit with status 3 when accuracy is below this")

    b = sub.add_parser("bench", help="measure throughput of one stage")
    b.add_argument("--stage", default="full", choices=("tokenize", "pos", "lemma", "full"))
    b.add_argument("--input", help="plain-text corpus (blank lines separate paragraphs)")
    b.add_argument("--generate", type=int, metavar="N",
                   help="use a synthetic corpus of about N tokens instead of --input")
    b.add_argument("--runs", type=int, default=10)
    b.add_argument("--warmup", type=int, default=2)
    b.add_argument("--config", help="properties file for annotator settings")
    b.add_argument("--figure", help="also write a per-run throughput plot (png, pdf, svg)")
    return p


def _properties(path: str | None) -> tuple[list[str] | None, dict[str, dict[str, str]]]:
    from .pipeline import PipelineConfig

    if not path:
        return None, {}
    config = PipelineConfig.from_file(path)
    return config.annotators or None, config.properties


# --- annotate ---------------------------------------------------------------

def chunks(stream: TextIO) -> Iterator[tuple[int, str]]:
    """Yield (character offset, paragraph) for blank-line separated paragraphs."""
    offset = 0
    start = 0
    lines: list[str] = []
    for line in stream:
        if line.strip():
            if not lines:
                start = offset
            lines.append(line)
        elif lines:
            yield start, "".join(lines).rstrip("\n")
            lines = []
        offset += len(line)
    if lines:
        yield start, "".join(lines).rstrip("\n")


def _annotate(args) -> int:
    from .annotators import DEFAULT_ANNOTATORS, default_registry
    from .conll import document_dict, write_conll
    from .pipeline import PipelineConfig, build_pipeline

    if args.format not in FORMATS:
        raise UsageError(f"unsupported format {args.format!r}; supported formats: {', '.join(FORMATS)}")
    if args.threads < 1:
        raise UsageError("--threads must be at least 1")
    names, props = _properties(args.config)
    pipeline = build_pipeline(default_registry(), PipelineConfig(names or list(DEFAULT_ANNOTATORS), props))

    def render(item):
        offset, text = item
        doc = pipeline.annotate(text)
        if args.format == "conll":
            return write_conll(doc)
        data = document_dict(doc)
        if args.global_offsets:
            data = {"text": data["text"], "offset": offset, "sentences": data["sentences"],
                    "tokens": [dict(t, begin=t["begin"] + offset, end=t["end"] + offset)
                               for t in data["tokens"]]}
        return json.dumps(data, ensure_ascii=False, separators=(",", ":")) + "\n"

    src = open(args.input, encoding="utf-8") if args.input else io.TextIOWrapper(
        sys.stdin.buffer, encoding="utf-8")
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        items = chunks(src)
        if args.threads == 1:
            for item in items:
                out.write(render(item))
        else:
            with ThreadPoolExecutor(args.threads) as pool:
                # bounded batches keep memory flat; map preserves input order
                while batch := list(itertools.islice(items, args.threads * 16)):
                    for rendered in pool.map(render, batch):
                        out.write(rendered)
    finally:
        if args.input:
            src.close()
        if args.output:
            out.close()
        else:
            out.flush()
    return 0


# --- other subcommands ------------------------------------------------------

def _compile(args) -> int:
    from .morph import compile_lexicon

    header = compile_lexicon(args.input, args.output)
    print(f"entries\t{header.entry_count}\nblocks\t{header.block_count}\n"
          f"malformed_lines\t{len(header.malformed_lines)}\nchecksum\t{header.checksum.hex()}")
    return 0


def _train(args) -> int:
    from .conll import read_conllu
    from .tagger import coarse_map, save_model, train

    corpus = [s.tagged_words() for s in read_conllu(args.train)]
    model = train(corpus, epochs=args.epochs, seed=args.seed)
    save_model(model, args.out)
    for k, acc in enumerate(model.train_accuracy, 1):
        print(f"epoch\t{k}\t{acc:.4f}")
    if args.dev:
        gold = read_conllu(args.dev)
        total = upos = coarse = 0
        for sent in gold:
            words = sent.forms
            for (_, g), p in zip(sent.tagged_words(), model.tag(words)):
                total += 1
                upos += g == p
                coarse += coarse_map(g) == coarse_map(p)
        if total:
            print(f"dev\t{total}\tupos\t{upos / total:.4f}\tcoarse\t{coarse / total:.4f}")
    return 0


def _eval(args) -> int:
    from .annotators import standard_pipeline
    from .conll import read_conllu
    from .evaluation import gold_document, lemma_score, pos_score, raw_text

    gold = read_conllu(args.gold)
    _, props = _properties(args.config)
    if args.model:
        props.setdefault("pos", {})["model"] = args.model
    if args.lexicon:
        props.setdefault("morph", {})["lexicon"] = args.lexicon
    stages = ["pos"] if args.task == "pos" else ["morph", "pos", "lemma"]
    if args.raw:
        doc = standard_pipeline(["tokenize"] + stages, props).annotate(raw_text(gold))
    else:
        pipeline = standard_pipeline(stages, props, provided=("text", "tokens", "sentences"))
        doc = pipeline.annotate_document(gold_document(gold))
    score = pos_score(doc, gold) if args.task == "pos" else lemma_score(doc, gold)
    print(f"{score.task}\t{score.total}\t{score.accuracy:.4f}")
    if args.min is not None and score.accuracy < args.min:
        log.error("accuracy %.4f is below the required %.4f", score.accuracy, args.min)
        return EXIT_BELOW_MIN
    return 0


def _bench(args) -> int:
    from .bench import bench, make_corpus, make_stage

    if args.runs < 1 or args.warmup < 0:
        raise UsageError("--runs must be at least 1 and --warmup non-negative")
    if args.generate:
        text = make_corpus(args.generate)
    elif args.input:
        text = Path(args.input).read_text(encoding="utf-8")
    else:
        raise UsageError("bench needs --input FILE or --generate N")
    _, props = _properties(args.config)
    report = bench(make_stage(args.stage, props), text, args.runs, args.warmup)
    sys.stdout.write(report.to_tsv())
    if args.figure:
        from .plotting import plot_bench

        plot_bench([report], args.figure)
    return 0


COMMANDS = {"annotate": _annotate, "compile-lexicon": _compile, "train-pos": _train,
            "eval": _eval, "bench": _bench}


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except (TintError, OSError, UnicodeDecodeError, ValueError) as exc:
        sys.stderr.write(f"tintpipe: error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
