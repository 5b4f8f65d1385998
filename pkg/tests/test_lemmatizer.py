import itertools

import pytest

from tintpipe.errors import MissingPrerequisite, ResourceLoadError
from tintpipe.lemmatizer import (LemmaDecision, compatible_analyses, lemma_annotator, lemmatize_token,
                                 load_articles, resolve_by_article)
from tintpipe.morph import MorphAnalyzer, TagParser
from tintpipe.morph.analysis import MorphAnalysis
from tintpipe.pipeline import Document, Token
from tintpipe.resources import resource_path

ARTICLES = load_articles()
PARSER = TagParser.load()


def noun(lemma, gender, number):
    return MorphAnalysis(lemma, "noun", (("gender", gender), ("number", number)),
                         f"NOUN-{gender.upper()}:{number}")


def sentence(words, analyzer=None):
    """Tokens from (surface, pos) pairs, with morph from ``analyzer`` or empty."""
    toks = []
    pos = 0
    for k, (surface, tag) in enumerate(words):
        tok = Token(k, pos, pos + len(surface), surface)
        tok.annotations["pos"] = tag
        tok.annotations["morph"] = list(analyzer.analyze(surface)) if analyzer else []
        toks.append(tok)
        pos += len(surface) + 1
    return toks


@pytest.fixture(scope="module")
def analyzer(fixture_store, affixes):
    return MorphAnalyzer(fixture_store, affixes)


def test_compatible_analyses(analyzer):
    latte = list(analyzer.analyze("latte"))
    assert compatible_analyses(latte, "NOUN") == latte
    assert compatible_analyses([PARSER.analysis("portare", "VER:inf+pres")], "NOUN") == []
    assert compatible_analyses([], "VERB") == []
    porta = list(analyzer.analyze("porta"))
    assert [a.lemma for a in compatible_analyses(porta, "VERB")] == ["portare", "portare"]
    assert [a.lemma for a in compatible_analyses(porta, "NOUN")] == ["porta"]


def test_latte_latta(analyzer):
    il = sentence([("il", "DET"), ("latte", "NOUN")], analyzer)
    le = sentence([("le", "DET"), ("latte", "NOUN")], analyzer)
    assert lemmatize_token(il, 1) == LemmaDecision("latte", "article_disambiguated", noun("latte", "m", "s"))
    assert lemmatize_token(le, 1).lemma == "latta"
    assert lemmatize_token(le, 1).source == "article_disambiguated"


def test_no_article_falls_back_to_store_order(analyzer):
    toks = sentence([("latte", "NOUN")], analyzer)
    assert lemmatize_token(toks, 0) == LemmaDecision("latte", "lexicon_match", noun("latte", "m", "s"))


def test_article_window_and_barriers():
    cands = [noun("latte", "m", "s"), noun("latta", "f", "p")]
    toks = sentence([("le", "DET"), ("x", "ADJ"), ("y", "ADJ"), ("z", "ADJ"), ("latte", "NOUN")])
    assert resolve_by_article(toks, 4, cands) is None
    toks = sentence([("le", "DET"), ("x", "ADJ"), ("y", "ADJ"), ("latte", "NOUN")])
    assert resolve_by_article(toks, 3, cands).lemma == "latta"
    toks = sentence([("le", "DET"), ("beve", "VERB"), ("latte", "NOUN")])
    assert resolve_by_article(toks, 2, cands) is None
    toks = sentence([("il", "DET"), ("latte", "NOUN")])
    assert resolve_by_article(toks, 0, cands) is None
    # clitic "le" is a pronoun, not an article
    toks = sentence([("il", "DET"), ("le", "PRON"), ("latte", "NOUN")])
    assert resolve_by_article(toks, 2, cands).lemma == "latte"


def test_articulated_prepositions():
    cands = [noun("latte", "m", "s"), noun("latta", "f", "p")]
    assert resolve_by_article(sentence([("delle", "ADP"), ("latte", "NOUN")]), 1, cands).lemma == "latta"
    assert resolve_by_article(sentence([("del", "ADP"), ("latte", "NOUN")]), 1, cands).lemma == "latte"


def test_every_article_against_every_candidate_pair():
    cells = list(itertools.product("mf", "sp"))
    for article, (gender, number) in ARTICLES.items():
        for (g1, n1), (g2, n2) in itertools.combinations(cells, 2):
            cands = [noun("a", g1, n1), noun("b", g2, n2)]
            toks = sentence([(article, "DET"), ("x", "NOUN")])
            want = [c for c in cands if gender in (None, c.gender) and number in (None, c.number)]
            got = resolve_by_article(toks, 1, cands)
            assert got == (want[0] if len(want) == 1 else None), (article, g1, n1, g2, n2)
    for article in ("il", "lo", "un", "uno"):
        assert resolve_by_article(sentence([(article, "DET"), ("x", "NOUN")]), 1,
                                  [noun("m", "m", "s"), noun("f", "f", "s")]).lemma == "m"
    for article in ("la", "una", "un'"):
        assert resolve_by_article(sentence([(article, "DET"), ("x", "NOUN")]), 1,
                                  [noun("m", "m", "s"), noun("f", "f", "s")]).lemma == "f"


def test_decomposition_source(analyzer):
    toks = sentence([("portarglielo", "VERB")], analyzer)
    d = lemmatize_token(toks, 0)
    assert (d.lemma, d.source) == ("portare", "decomposition")
    assert d.chosen_analysis.derivation.infixes == ("glie",)


def test_fallback_surface():
    toks = sentence([("Xyzzy", "NOUN"), ("Rossi", "PROPN"), ("3,5", "NUM"), ("!", "PUNCT")])
    assert [lemmatize_token(toks, i) for i in range(4)] == [
        LemmaDecision("xyzzy", "fallback_surface"), LemmaDecision("Rossi", "fallback_surface"),
        LemmaDecision("3,5", "fallback_surface"), LemmaDecision("!", "fallback_surface")]


def test_missing_prerequisites():
    tok = Token(0, 0, 4, "cane")
    with pytest.raises(MissingPrerequisite):
        lemmatize_token([tok], 0)
    tok.annotations["pos"] = "NOUN"
    with pytest.raises(MissingPrerequisite):
        lemmatize_token([tok], 0)


def test_invariants_over_desk_text(desk_pipeline):
    lemma = desk_pipeline.annotator("lemma")
    text = resource_path("desk_text.txt").read_text("utf-8")
    doc = desk_pipeline.annotate(text)
    seen = set()
    for sent in doc.sentence_tokens():
        for i, tok in enumerate(sent):
            d = lemmatize_token(sent, i, lemma.articles, lemma.compat)
            assert d.lemma and d.lemma == tok.annotations["lemma"]
            if d.source in ("lexicon_match", "article_disambiguated"):
                assert d.chosen_analysis in compatible_analyses([d.chosen_analysis], tok.pos)
            seen.add(d.source)
    assert seen == {"lexicon_match", "decomposition", "article_disambiguated", "fallback_surface"}


def test_il_cane_dorme(desk_pipeline):
    doc = desk_pipeline.annotate("Il cane dorme.")
    assert [t.annotations["lemma"] for t in doc.tokens] == ["il", "cane", "dormire", "."]


def test_empty_document_is_noop():
    doc = Document("")
    lemma_annotator({}).annotate(doc)
    assert doc.tokens == []


def test_resource_errors(tmp_path):
    with pytest.raises(ResourceLoadError):
        lemma_annotator({"articleFile": str(tmp_path / "missing.tsv")})
    bad = tmp_path / "bad.tsv"
    bad.write_text("il\tm\n", encoding="utf-8")
    with pytest.raises(ResourceLoadError):
        load_articles(bad)
