import math
import statistics

import pytest

from tintpipe.bench import STAGES, BenchReport, Stage, bench, make_corpus, make_stage, paragraphs
from tintpipe.plotting import plot_bench

TEXT = "Il cane dorme. Marco porta la borsa.\n\nLe latte sono vuote.\n"


def test_ten_measured_runs_and_warmup():
    calls = []
    stage = Stage("count", prepare=lambda paras: paras, run=lambda paras: calls.append(1) or 7,
                  reset=lambda: calls.append(0))
    report = bench(stage, TEXT, runs=10, warmup=2)
    assert len(report.runs) == 10 and report.warmup == 2
    assert calls.count(1) == 12 and calls.count(0) == 12
    assert report.tokens == 7
    assert "caches cleared" in report.env


def test_mean_is_arithmetic_mean():
    report = bench(make_stage("tokenize"), TEXT, runs=10, warmup=0)
    times = [t for t, _ in report.runs]
    assert math.isclose(report.mean_seconds, statistics.fmean(times), rel_tol=0, abs_tol=math.ulp(max(times)))
    assert report.tokens_per_sec == pytest.approx(report.tokens / report.mean_seconds)


def test_empty_corpus_is_zero():
    for name in STAGES:
        report = bench(make_stage(name), "", runs=2, warmup=1)
        assert report.tokens == 0 and report.tokens_per_sec == 0.0


def test_consecutive_runs_count_the_same_tokens():
    text = make_corpus(2000)
    for name in STAGES:
        stage = make_stage(name)
        a, b = bench(stage, text, runs=2, warmup=0), bench(stage, text, runs=2, warmup=0)
        assert {n for _, n in a.runs} == {n for _, n in b.runs} == {a.tokens}
    counts = {bench(make_stage(n), text, runs=1, warmup=0).tokens for n in STAGES}
    assert len(counts) == 1


def test_bad_arguments():
    with pytest.raises(ValueError):
        bench(make_stage("tokenize"), TEXT, runs=0)
    with pytest.raises(ValueError):
        make_stage("parse")


def test_corpus_generator():
    text = make_corpus(5000, seed=3)
    assert text == make_corpus(5000, seed=3)
    assert text != make_corpus(5000, seed=4)
    assert len(paragraphs(text)) > 10
    report = bench(make_stage("tokenize"), text, runs=1, warmup=0)
    assert report.tokens >= 5000


def test_tsv_report():
    report = BenchReport("pos", [(0.5, 100), (0.25, 100)], 2, "env note")
    lines = report.to_tsv().splitlines()
    assert lines[0] == "# env\tenv note"
    assert lines[2].split("\t") == ["pos", "2", "2", "100", "0.375000", "266.7"]
    assert lines[4:] == ["1\t0.500000\t100\t200.0", "2\t0.250000\t100\t400.0"]


def test_figure_written(tmp_path):
    reports = [BenchReport("tokenize", [(0.5, 100), (0.4, 100)], 2), BenchReport("pos", [(1.0, 100)], 2)]
    out = plot_bench(reports, tmp_path / "bench.png", thresholds={"tokenize": 150.0})
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
