import re

from hypothesis import given, strategies as st

from chemsumm.segmenter import Sentence, load_abbreviations, segment

ABBREVS = frozenset({"fig.", "et al.", "e.g.", "no."})


def texts(sentences):
    return [s.raw_text for s in sentences]


def test_plain_boundaries():
    assert texts(segment("A reacts. B forms.")) == ["A reacts.", "B forms."]


def test_abbreviation_suppression():
    got = segment("See Fig. 2 for yield.", ABBREVS)
    assert texts(got) == ["See Fig. 2 for yield."]


def test_decimal_not_split():
    got = segment("Yield was 85.3 percent. Done carefully.")
    assert texts(got) == ["Yield was 85.3 percent.", "Done carefully."]


def test_question_and_exclamation():
    got = segment("Really? Yes indeed! Quite so.")
    assert texts(got) == ["Really?", "Yes indeed!", "Quite so."]


def test_lowercase_continuation_not_split():
    got = segment("The cmpd. was pure. It melted.")
    # "cmpd." is not in the (empty) abbreviation list but "was" is lowercase
    assert texts(got) == ["The cmpd. was pure.", "It melted."]


def test_paragraph_break_always_splits():
    got = segment("first paragraph without punctuation\n\nsecond paragraph here")
    assert texts(got) == ["first paragraph without punctuation", "second paragraph here"]


def test_indices_contiguous():
    got = segment("One two. Three four. Five six.")
    assert [s.index for s in got] == [1, 2, 3]


def test_short_fragment_merged():
    got = segment("The melting point was measured. 42. It was high.")
    assert len(got) == 2
    assert "42." in got[0].raw_text


def test_empty_body():
    assert segment("") == []
    assert segment("  \n \n  ") == []


def test_multiword_abbreviation():
    got = segment("As shown by Smith et al. Nothing was lost.", ABBREVS)
    assert len(got) == 1


def test_load_abbreviations(tmp_path):
    f = tmp_path / "abbr.txt"
    f.write_text("Fig.\net al.\n# note\n\nfig.\n", encoding="utf-8")
    entries = load_abbreviations(f)
    assert entries == frozenset({"fig.", "et al."})


def test_load_abbreviations_empty(tmp_path):
    f = tmp_path / "abbr.txt"
    f.write_text("# only a comment\n", encoding="utf-8")
    assert load_abbreviations(f) == frozenset()


_WORD = st.text(alphabet="abcdefgh", min_size=1, max_size=6)


@st.composite
def bodies(draw):
    n_sent = draw(st.integers(1, 6))
    sentences = []
    for _ in range(n_sent):
        words = draw(st.lists(_WORD, min_size=2, max_size=6))
        sentences.append(" ".join(words).capitalize() + ".")
    return " ".join(sentences)


@given(bodies())
def test_no_text_lost_or_invented(body):
    got = segment(body)
    squashed = re.sub(r"\s+", "", " ".join(texts(got)))
    assert squashed == re.sub(r"\s+", "", body)


@given(bodies())
def test_segmentation_deterministic(body):
    assert segment(body) == segment(body)


@given(st.lists(bodies(), min_size=1, max_size=4))
def test_sentence_count_at_least_paragraphs(paragraphs):
    body = "\n\n".join(paragraphs)
    got = segment(body)
    assert len(got) >= len(paragraphs)


def test_sentence_type():
    got = segment("Plain body here.")
    assert got == [Sentence(index=1, raw_text="Plain body here.")]
