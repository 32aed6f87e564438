"""Sentence normalization pipeline with chemical-term protection.

Stages: tokenize, stop-word removal, chemical detection protecting matched
tokens, case/punctuation normalization of the rest, then Porter stemming of
non-chemical terms only.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .chemner import BayesModel, RuleSet, is_chemical
from .segmenter import Sentence
from .stemmer import porter_stem

_STRIP_CHARS = ".,;:!?()[]\"'"


@dataclass(frozen=True)
class ProcessedSentence:
    index: int
    terms: tuple[str, ...]
    chem_flags: tuple[bool, ...]

    @property
    def chem_count(self) -> int:
        return sum(self.chem_flags)


def load_stopwords(path: str | Path) -> frozenset[str]:
    """One word per line, '#' comments, lowercased."""
    entries = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            entries.add(line.lower())
    return frozenset(entries)


def tokenize(raw_text: str) -> list[str]:
    """Whitespace split with terminal punctuation stripped.

    Only leading/trailing punctuation goes; internal commas and hyphens
    (chemical locants) survive.
    """
    tokens = []
    for chunk in raw_text.split():
        token = chunk.strip(_STRIP_CHARS)
        if token:
            tokens.append(token)
    return tokens


def remove_stopwords(tokens: Iterable[str], stoplist: frozenset[str]) -> list[str]:
    return [t for t in tokens if t.lower() not in stoplist]


def _normalize_plain(token: str) -> str:
    """Stage-2 normalization for non-chemical tokens: lowercase, letters only."""
    return "".join(c for c in token.lower() if c.isalpha())


def preprocess_tokens(
    tokens: Sequence[str],
    stoplist: frozenset[str],
    model: BayesModel,
    rules: RuleSet,
) -> tuple[tuple[str, ...], tuple[bool, ...]]:
    terms: list[str] = []
    flags: list[bool] = []
    for token in remove_stopwords(tokens, stoplist):
        if is_chemical(model, rules, token):
            # protected: keep punctuation; lowercase only plain-alphabetic forms
            term = token.lower() if token.isalpha() else token
            terms.append(term)
            flags.append(True)
        else:
            plain = _normalize_plain(token)
            if plain:
                terms.append(porter_stem(plain))
                flags.append(False)
    return tuple(terms), tuple(flags)


def preprocess_sentence(
    sentence: Sentence,
    stoplist: frozenset[str],
    model: BayesModel,
    rules: RuleSet,
) -> ProcessedSentence:
    terms, flags = preprocess_tokens(tokenize(sentence.raw_text), stoplist, model, rules)
    return ProcessedSentence(index=sentence.index, terms=terms, chem_flags=flags)


def preprocess_title(
    title: str,
    stoplist: frozenset[str],
    model: BayesModel,
    rules: RuleSet,
) -> ProcessedSentence:
    """The title runs through the same pipeline; ordinal 0 marks it."""
    terms, flags = preprocess_tokens(tokenize(title), stoplist, model, rules)
    return ProcessedSentence(index=0, terms=terms, chem_flags=flags)
