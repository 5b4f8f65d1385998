import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tintpipe.errors import ResourceLoadError
from tintpipe.morph import AffixTable, MorphAnalyzer, decompose
from tintpipe.pipeline import Document, Token


def test_portarglielo(fixture_store, affixes):
    best = decompose(fixture_store, "portarglielo", affixes)[0]
    assert (best.prefix, best.root, best.root_surface, best.infixes, best.suffix) == \
        (None, "portare", "portar", ("glie",), "lo")
    assert best.root_analysis.category == "verb" and best.root_analysis.lemma == "portare"


def test_portacene(fixture_store, affixes):
    best = decompose(fixture_store, "portacene", affixes)[0]
    assert (best.root_surface, best.infixes, best.suffix) == ("porta", ("ce",), "ne")
    assert best.root_analysis.category == "verb" and best.root_analysis.lemma == "portare"


def test_bidirezionale(fixture_store, affixes):
    best = decompose(fixture_store, "bidirezionale", affixes)[0]
    assert (best.prefix, best.root, best.infixes, best.suffix) == ("bi", "direzionale", (), None)
    assert best.root_analysis.category == "adjective"


def test_no_decomposition(fixture_store, affixes):
    assert decompose(fixture_store, "zzzzz", affixes) == []
    # finite forms do not host enclitics
    assert decompose(fixture_store, "dormelo", affixes) == []
    # unknown clusters never match
    assert decompose(fixture_store, "portarlone", affixes) == []


def test_best_first_order(fixture_store, affixes):
    found = decompose(fixture_store, "riportarlo", affixes)
    keys = [(d.affix_count, -len(d.root_surface)) for d in found]
    assert keys == sorted(keys)


def test_affix_table_parse_errors():
    with pytest.raises(ResourceLoadError):
        AffixTable.parse("suffix\tx\n")
    table = AffixTable.parse("# c\nprefix\tbi\nclitic\tlo\ncluster\tglie\tlo\nrestore\tr\tre\n")
    assert table.prefixes == ("bi",) and table.clusters == (("glie", "lo"),)


def test_analyzer_projects_derivation(fixture_store, affixes):
    analyzer = MorphAnalyzer(fixture_store, affixes)
    doc = Document("cane , portarglielo bidirezionale")
    doc.tokens = [Token(i, b, e, doc.text[b:e]) for i, (b, e) in
                  enumerate([(0, 4), (5, 6), (7, 19), (20, 33)])]
    analyzer.annotate(doc)
    cane, comma, portar, bi = (t.annotations["morph"] for t in doc.tokens)
    assert [a.lemma for a in cane] == ["cane"] and cane[0].derivation is None
    assert comma == []
    assert portar[0].lemma == "portare" and portar[0].derivation.suffix == "lo"
    assert bi[0].lemma == "bidirezionale" and bi[0].derivation.prefix == "bi"


PARTS = st.tuples(
    st.sampled_from(["", "ri", "bi", "anti", "pre"]),
    st.sampled_from(["portar", "porta", "direzionale", "cane", "dorme", "latte", "xyzw"]),
    st.sampled_from(["", "lo", "ne", "glielo", "cene", "mi", "la"]),
)


@settings(max_examples=200, deadline=None)
@given(PARTS)
def test_soundness(fixture_store, affixes, parts):
    surface = "".join(parts)
    for d in decompose(fixture_store, surface, affixes):
        assert d.surface == surface
        assert fixture_store.lookup(d.root)
        assert d.root_analysis in fixture_store.lookup(d.root)
        if d.root != d.root_surface:
            # only the documented restorations change the root
            assert any(d.root_surface.endswith(a) and d.root == d.root_surface[:-len(a)] + b
                       for a, b in affixes.restorations)
