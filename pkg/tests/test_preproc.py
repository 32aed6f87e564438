from hypothesis import given, strategies as st

from chemsumm.preproc import (
    preprocess_sentence,
    preprocess_title,
    remove_stopwords,
    tokenize,
)
from chemsumm.segmenter import Sentence

TABLE_SENTENCE = (
    "Cycloalkynes are known to isomerize to the 1,2-dienes under basic conditions."
)


def test_tokenize_strips_terminal_punctuation():
    assert tokenize("Cycloalkynes are known.") == ["Cycloalkynes", "are", "known"]


def test_tokenize_keeps_internal_punctuation():
    assert tokenize("the 1,2-dienes,") == ["the", "1,2-dienes"]


def test_tokenize_empty():
    assert tokenize("") == []


def test_tokenize_drops_bare_punctuation():
    assert tokenize("a ... b") == ["a", "b"]


def test_remove_stopwords_table_row(config):
    tokens = tokenize(TABLE_SENTENCE)
    got = remove_stopwords(tokens, config.stoplist)
    assert got == [
        "Cycloalkynes", "known", "isomerize", "1,2-dienes",
        "under", "basic", "conditions",
    ]


def test_remove_stopwords_empty():
    assert remove_stopwords([], frozenset({"the"})) == []


def test_remove_stopwords_case_insensitive():
    assert remove_stopwords(["THE", "The", "the"], frozenset({"the"})) == []


def test_full_pipeline_table_row(config):
    ps = preprocess_sentence(
        Sentence(1, TABLE_SENTENCE), config.stoplist, config.model, config.rules
    )
    assert ps.terms == (
        "cycloalkynes", "known", "isomer", "1,2-dienes", "under", "basic", "condit"
    )
    assert ps.chem_flags == (True, False, False, True, False, False, False)
    assert ps.chem_count == 2


def test_stopword_only_sentence(config):
    ps = preprocess_sentence(
        Sentence(1, "The of are to."), config.stoplist, config.model, config.rules
    )
    assert ps.terms == ()
    assert ps.chem_count == 0


def test_formula_token_protected(config):
    ps = preprocess_sentence(
        Sentence(1, "H2O boils."), config.stoplist, config.model, config.rules
    )
    assert ps.terms == ("H2O", "boil")
    assert ps.chem_flags == (True, False)


def test_protected_terms_never_stemmed(config):
    ps = preprocess_sentence(
        Sentence(1, TABLE_SENTENCE), config.stoplist, config.model, config.rules
    )
    for term, flag in zip(ps.terms, ps.chem_flags):
        if flag:
            assert term.lower() in TABLE_SENTENCE.lower()


def test_pipeline_never_produces_dien_from_locant_form(config):
    # protection must run before stemming, so the locant term stays intact
    ps = preprocess_sentence(
        Sentence(1, "The 1,2-dienes form."), config.stoplist, config.model, config.rules
    )
    assert "dien" not in ps.terms
    assert "1,2-dienes" in ps.terms


def test_title_uses_same_pipeline(config):
    pt = preprocess_title(
        TABLE_SENTENCE, config.stoplist, config.model, config.rules
    )
    ps = preprocess_sentence(
        Sentence(1, TABLE_SENTENCE), config.stoplist, config.model, config.rules
    )
    assert pt.terms == ps.terms
    assert pt.index == 0


@given(st.lists(st.sampled_from(["the", "of", "are", "to", "in", "and"]),
                min_size=1, max_size=8))
def test_no_stopword_survives(config, words):
    ps = preprocess_sentence(
        Sentence(1, " ".join(words) + "."), config.stoplist, config.model, config.rules
    )
    assert ps.terms == ()


@given(st.lists(st.sampled_from(
    ["reaction", "product", "yields", "heating", "mixture", "solvent"]),
    min_size=1, max_size=8))
def test_pipeline_deterministic(config, words):
    sent = Sentence(1, " ".join(words).capitalize() + ".")
    first = preprocess_sentence(sent, config.stoplist, config.model, config.rules)
    second = preprocess_sentence(sent, config.stoplist, config.model, config.rules)
    assert first == second
    assert all(t == t.lower() for t, f in zip(first.terms, first.chem_flags) if not f)
