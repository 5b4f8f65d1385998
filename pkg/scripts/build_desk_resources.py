"""Build the bundled desk resources from scripts/data/desk_corpus.txt.

Outputs:
    tests/data/desk-train.conllu, tests/data/desk-test.conllu   (every 5th sentence is test)
    src/tintpipe/resources/desk_lexicon.tsv                     (Morph-it style full-form lexicon)
    src/tintpipe/resources/desk_lexicon.mlex                    (compiled store)
    src/tintpipe/resources/desk_pos.posm                        (tagger trained on the train split)
    src/tintpipe/resources/desk_text.txt                        (running text, seeds the bench corpus)

The lexicon is generated from the word lists in lexicon_data.py by a small
paradigm generator.  Forms carrying enclitics (portarlo, portarglielo) are
deliberately left out so the decomposition path is exercised.

Usage: python3 scripts/build_desk_resources.py [--check]
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "scripts"))

import lexicon_data as data  # noqa: E402

from tintpipe.evaluation import raw_text  # noqa: E402
from tintpipe.conll import ConlluSentence, read_conllu, render_conllu  # noqa: E402
from tintpipe.morph import LexiconStore, compile_lexicon  # noqa: E402
from tintpipe.tagger import save_model, train  # noqa: E402

RESOURCES = ROOT / "src" / "tintpipe" / "resources"
TESTDATA = ROOT / "tests" / "data"
PERSONS = [("1", "s"), ("2", "s"), ("3", "s"), ("1", "p"), ("2", "p"), ("3", "p")]


# ---------------------------------------------------------------- verbs

def join(stem: str, ending: str, conj: str) -> str:
    if conj == "are" and stem[-1:] in "cg" and ending[:1] in ("e", "i"):
        return stem + "h" + ending
    if stem.endswith(("ci", "gi")) and ending[:1] == "e":
        return stem[:-1] + ending
    if stem.endswith("i") and ending.startswith("i"):
        return stem + ending[1:]
    return stem + ending


def conjugate(inf: str, head: str, isc: bool):
    irr = data.IRREGULAR.get(inf, {})
    conj = inf[-3:] if inf[-3:] in ("are", "ere", "ire") else "ere"
    stem = inf[:-3] if inf[-3:] in ("are", "ere", "ire") else irr["pres"].split()[0][:-1]
    out = [(inf, f"{head}:inf+pres")]

    def person_forms(forms, mood_tense):
        for form, (p, n) in zip(forms, PERSONS):
            out.append((form, f"{head}:{mood_tense}+{p}+{n}"))

    if "pres" in irr:
        pres = irr["pres"].split()
    elif isc:
        pres = [stem + e for e in ("isco", "isci", "isce", "iamo", "ite", "iscono")]
    else:
        ends = {"are": ("o", "i", "a", "iamo", "ate", "ano"),
                "ere": ("o", "i", "e", "iamo", "ete", "ono"),
                "ire": ("o", "i", "e", "iamo", "ite", "ono")}[conj]
        pres = [join(stem, e, conj) for e in ends]
    person_forms(pres, "ind+pres")

    if "impf" in irr:
        impf = irr["impf"].split()
    else:
        istem = irr.get("impf_stem", inf[:-2])
        impf = [istem + e for e in ("vo", "vi", "va", "vamo", "vate", "vano")]
    person_forms(impf, "ind+impf")

    fstem = irr.get("fut") or (join(stem, "er", conj) if conj != "ire" else stem + "ir")
    person_forms([fstem + e for e in ("ò", "ai", "à", "emo", "ete", "anno")], "ind+fut")
    person_forms([fstem + e for e in ("ei", "esti", "ebbe", "emmo", "este", "ebbero")], "cond+pres")

    if "sub" in irr:
        sub = irr["sub"].split()
    elif conj == "are" and "pres" not in irr:
        sub = [join(stem, e, conj) for e in ("i", "i", "i", "iamo", "iate", "ino")]
    else:
        s = pres[0][:-1]
        sub = [s + "a", s + "a", s + "a", pres[3], pres[3][:-2] + "te", s + "ano"]
    person_forms(sub, "sub+pres")

    if "past" in irr:
        person_forms(irr["past"].split(), "ind+past")
    elif not irr:
        ends = {"are": ("ai", "asti", "ò", "ammo", "aste", "arono"),
                "ere": ("ei", "esti", "é", "emmo", "este", "erono"),
                "ire": ("ii", "isti", "ì", "immo", "iste", "irono")}[conj]
        person_forms([join(stem, e, conj) for e in ends], "ind+past")

    impr = irr.get("impr", "").split() or [join(stem, "a", conj) if conj == "are" else pres[1]]
    for form in impr:
        out.append((form, f"{head}:impr+pres+2+s"))
    out.append((pres[4], f"{head}:impr+pres+2+p"))

    ger = irr.get("ger") or join(stem, "ando" if conj == "are" else "endo", conj)
    out.append((ger, f"{head}:ger+pres"))

    pstem = irr.get("part") or join(stem, {"are": "at", "ere": "ut", "ire": "it"}[conj], conj)
    for end, g, n in (("o", "m", "s"), ("a", "f", "s"), ("i", "m", "p"), ("e", "f", "p")):
        out.append((pstem + end, f"{head}:part+past+{n}+{g}"))
    return [(form, inf, tag) for form, tag in out]


# ---------------------------------------------------------------- nominals

def noun_plural(lemma: str, gender: str) -> str | None:
    if lemma.endswith("io"):
        return lemma[:-1]
    if lemma.endswith(("co", "go")):
        return lemma[:-1] + "hi"
    if lemma.endswith("o"):
        return lemma[:-1] + "i"
    if lemma.endswith(("ca", "ga")) and gender == "f":
        return lemma[:-1] + "he"
    if lemma.endswith(("cia", "gia")):
        return lemma[:-2] + "e" if lemma[-4] not in "aeiou" else lemma[:-1] + "e"
    if lemma.endswith("a"):
        return lemma[:-1] + ("e" if gender == "f" else "i")
    if lemma.endswith("e"):
        return lemma[:-1] + "i"
    return None


def nouns():
    for item in data.NOUNS.split():
        parts = item.split(":")
        lemma, gender = parts[0], parts[1]
        plural = parts[2] if len(parts) > 2 else noun_plural(lemma, gender)
        g = gender.upper()
        yield lemma, lemma, f"NOUN-{g}:s"
        yield (plural if plural not in (None, "-") else lemma), lemma, f"NOUN-{g}:p"


def adjectives():
    for item in data.ADJECTIVES.split():
        lemma, _, mplural = item.partition(":")
        if lemma.endswith("o"):
            base = lemma[:-1]
            fplural = base + "he" if lemma.endswith(("co", "go")) else base + "e"
            forms = [(lemma, "m", "s"), (base + "a", "f", "s"),
                     (mplural or base + "i", "m", "p"), (fplural, "f", "p")]
        else:
            plural = lemma[:-1] + "i"
            forms = [(lemma, "m", "s"), (lemma, "f", "s"), (plural, "m", "p"), (plural, "f", "p")]
        for form, g, n in forms:
            yield form, lemma, f"ADJ:pos+{g}+{n}"


def articulated():
    shapes = [("l", "M:s"), ("llo", "M:s"), ("ll'", "M:s"), ("ll'", "F:s"),
              ("lla", "F:s"), ("i", "M:p"), ("gli", "M:p"), ("lle", "F:p")]
    for prep, stem in data.ARTPRE.items():
        for end, feats in shapes:
            yield stem + end, prep, f"ARTPRE-{feats}"
    yield "col", "con", "ARTPRE-M:s"
    yield "coi", "con", "ARTPRE-M:p"


def lexicon_lines() -> list[str]:
    rows = []
    for item in data.VERBS.split():
        inf, _, flag = item.partition(":")
        head = flag if flag in ("AUX", "MOD") else "VER"
        rows.extend(conjugate(inf, head, flag == "isc"))
    rows.extend(nouns())
    rows.extend(adjectives())
    rows.extend(articulated())
    for line in data.EXTRA.strip().splitlines():
        rows.append(tuple(line.split("\t")))
    for name in data.PROPER.split():
        rows.append((name, name, "NPR"))
    seen, lines = set(), []
    for row in rows:
        if row not in seen:
            seen.add(row)
            lines.append("\t".join(row))
    return lines


# ---------------------------------------------------------------- corpus

NO_SPACE_BEFORE = set(".,;:!?)»…")
NO_SPACE_AFTER = set("(«")


def parse_corpus(path: Path) -> list[list[tuple[str, list[tuple[str, str, str]]]]]:
    """Sentences as lists of (surface, [(word, upos, lemma), ...])."""
    sentences = []
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        sentence = []
        for item in line.split(" "):
            if ">" in item:
                surface, rest = item.split(">", 1)
                words = [_word(w) for w in rest.split(",")]
            else:
                word = _word(item)
                surface, words = word[0], [word]
            sentence.append((surface, words))
        sentences.append(sentence)
    return sentences


def _word(item: str) -> tuple[str, str, str]:
    # the form itself may contain "/" (urls); upos and lemma never do
    parts = item.split("/")
    if len(parts) >= 3 and parts[-2].isupper() and parts[-2].isalpha():
        return "/".join(parts[:-2]), parts[-2], parts[-1]
    return "/".join(parts[:-1]), parts[-1], "/".join(parts[:-1]).lower()


def to_conllu(sentence, sent_id: str) -> ConlluSentence:
    text, rows, n = "", [], 0
    for k, (surface, words) in enumerate(sentence):
        nxt = sentence[k + 1][0] if k + 1 < len(sentence) else None
        glued = nxt is not None and (nxt[0] in NO_SPACE_BEFORE or surface in NO_SPACE_AFTER
                                     or (surface.endswith("'") and surface != "po'"))
        misc = "SpaceAfter=No" if glued else "_"
        text += surface + ("" if glued or nxt is None else " ")
        if len(words) > 1:
            rows.append([f"{n + 1}-{n + len(words)}", surface, "_", "_", "_", "_", "_", "_", "_", misc])
            misc = "_"
        for word, upos, lemma in words:
            n += 1
            rows.append([str(n), word, lemma, upos, "_", "_", "_", "_", "_", misc if len(words) == 1 else "_"])
    return ConlluSentence([tuple(r) for r in rows], [f"# sent_id = {sent_id}", f"# text = {text}"])


def coverage(sentences, store: LexiconStore) -> list[str]:
    from tintpipe.lemmatizer import compatible_analyses

    misses = []
    for sentence in sentences:
        for surface, words in sentence:
            for word, upos, lemma in words:
                if upos in ("PUNCT", "NUM", "SYM", "X"):
                    continue
                found = compatible_analyses(store.lookup(word, "fold_all"), upos)
                if not any(a.lemma == lemma for a in found):
                    misses.append(f"{word}/{upos}/{lemma}")
    return misses


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="only report lexicon coverage")
    args = ap.parse_args(argv)

    sentences = parse_corpus(ROOT / "scripts" / "data" / "desk_corpus.txt")
    tsv = RESOURCES / "desk_lexicon.tsv"
    tsv.write_text("\n".join(lexicon_lines()) + "\n", encoding="utf-8")
    header = compile_lexicon(tsv, RESOURCES / "desk_lexicon.mlex")
    print(f"lexicon: {header.entry_count} forms", file=sys.stderr)

    with LexiconStore(RESOURCES / "desk_lexicon.mlex") as store:
        misses = coverage(sentences, store)
    for miss in sorted(set(misses)):
        print(f"uncovered: {miss}", file=sys.stderr)
    if args.check:
        return 0

    TESTDATA.mkdir(parents=True, exist_ok=True)
    conllu = [to_conllu(s, f"desk-{i + 1:03d}") for i, s in enumerate(sentences)]
    test = [c for i, c in enumerate(conllu) if i % 5 == 4]
    trainset = [c for i, c in enumerate(conllu) if i % 5 != 4]
    (TESTDATA / "desk-train.conllu").write_text(render_conllu(trainset), encoding="utf-8")
    (TESTDATA / "desk-test.conllu").write_text(render_conllu(test), encoding="utf-8")
    (RESOURCES / "desk_text.txt").write_text(raw_text(conllu) + "\n", encoding="utf-8")
    # round-trip through the reader so the shipped files are known to parse
    pairs = [s.tagged_words() for s in read_conllu(TESTDATA / "desk-train.conllu")]
    model = train(pairs, epochs=10, seed=1)
    save_model(model, RESOURCES / "desk_pos.posm")
    print(f"train: {len(trainset)} sentences, test: {len(test)}, "
          f"train accuracy {model.train_accuracy[-1]:.4f}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
