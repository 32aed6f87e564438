"""Bundled default resources: stoplist, abbreviations, classifier, rules."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources as importlib_resources
from pathlib import Path

from . import chemner
from .chemner import BayesModel, RuleSet
from .preproc import load_stopwords
from .scorer import SummaryConfig
from .segmenter import load_abbreviations


def data_path(name: str) -> Path:
    return Path(importlib_resources.files("chemsumm") / "data" / name)


def load_wordlist(path: str | Path) -> list[str]:
    """One token per line, '#' comments."""
    words = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.append(line)
    return words


@lru_cache(maxsize=1)
def default_stopwords() -> frozenset[str]:
    return load_stopwords(data_path("stopwords.txt"))


@lru_cache(maxsize=1)
def default_abbreviations() -> frozenset[str]:
    return load_abbreviations(data_path("abbreviations.txt"))


@lru_cache(maxsize=1)
def default_model(alpha: float = 1.0) -> BayesModel:
    """Miniature classifier trained on the bundled wordlists."""
    return chemner.train_bayes(
        load_wordlist(data_path("chemical_words.txt")),
        load_wordlist(data_path("common_words.txt")),
        alpha=alpha,
    )


@lru_cache(maxsize=1)
def default_rules() -> RuleSet:
    return chemner.default_rules()


def default_config(**overrides) -> SummaryConfig:
    kwargs = dict(
        stoplist=default_stopwords(),
        abbreviations=default_abbreviations(),
        model=default_model(),
        rules=default_rules(),
    )
    kwargs.update(overrides)
    return SummaryConfig(**kwargs)
