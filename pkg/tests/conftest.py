from pathlib import Path

import pytest

from tintpipe.annotators import standard_pipeline
from tintpipe.morph import AffixTable, LexiconStore, compile_lexicon

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def fixture_store(tmp_path_factory):
    out = tmp_path_factory.mktemp("lex") / "fixture.mlex"
    compile_lexicon(DATA / "fixture_lexicon.tsv", out)
    store = LexiconStore(out)
    yield store
    store.close()


@pytest.fixture(scope="session")
def affixes():
    return AffixTable.load()


@pytest.fixture(scope="session")
def desk_pipeline():
    return standard_pipeline()


ACCEPTANCE = pytest.StashKey[dict]()


class Criterion:
    """Context manager recording one acceptance criterion as a PASS or FAIL line."""

    def __init__(self, results: dict, number: int, title: str):
        self.results, self.number, self.title = results, number, title
        self.detail = ""

    def __enter__(self):
        return self

    def __exit__(self, kind, exc, tb):
        if exc is None:
            status, detail = "PASS", self.detail
        else:
            status = "FAIL"
            reason = str(exc).strip().splitlines()[0] if str(exc).strip() else kind.__name__
            detail = "; ".join(x for x in (self.detail, reason) if x)
        line = f"criterion {self.number:>2} {status}  {self.title}: {detail}"
        self.results[self.number] = line
        print(line)
        return False


@pytest.fixture
def criterion(request):
    results = request.config.stash.setdefault(ACCEPTANCE, {})
    return lambda number, title: Criterion(results, number, title)


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(ACCEPTANCE, {})
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
