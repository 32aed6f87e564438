"""Hybrid chemical-compound token classifier.

Two independent classifiers are combined with AND semantics (precision
first): a multinomial naive Bayes over letter trigrams and a small set of
pattern rules over the surface form of the token.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from .errors import EmptyTokenError, EmptyTrainingSetError, FormatError

CHEMICAL = "chemical"
NON_CHEMICAL = "non-chemical"
_CLASSES = (CHEMICAL, NON_CHEMICAL)
_UNSEEN = "<unseen>"


def extract_trigrams(word: str) -> list[str]:
    """Letter trigrams of the lowercased token padded with '^' and '$'."""
    if not word:
        raise EmptyTokenError("cannot extract trigrams from an empty token")
    padded = "^" + word.lower() + "$"
    return [padded[i:i + 3] for i in range(len(padded) - 2)]


@dataclass(frozen=True)
class BayesModel:
    class_log_priors: dict[str, float]
    trigram_log_likelihoods: dict[tuple[str, str], float]
    unseen_log_likelihoods: dict[str, float]
    vocabulary_size: int
    smoothing_alpha: float

    def validate(self) -> None:
        if self.smoothing_alpha <= 0:
            raise FormatError("smoothing alpha must be positive")
        prior_mass = sum(math.exp(p) for p in self.class_log_priors.values())
        if abs(prior_mass - 1.0) > 1e-9:
            raise FormatError(f"class priors sum to {prior_mass}, not 1")
        for cls in _CLASSES:
            if cls not in self.class_log_priors or cls not in self.unseen_log_likelihoods:
                raise FormatError(f"missing class {cls!r}")
            mass = math.exp(self.unseen_log_likelihoods[cls])
            mass += sum(
                math.exp(lp)
                for (_, c), lp in self.trigram_log_likelihoods.items()
                if c == cls
            )
            if abs(mass - 1.0) > 1e-6:
                raise FormatError(f"likelihoods for {cls!r} sum to {mass}, not 1")


def train_bayes(
    chemical_words: Sequence[str],
    other_words: Sequence[str],
    alpha: float = 1.0,
) -> BayesModel:
    """Multinomial naive Bayes over trigram counts with Laplace smoothing."""
    if not chemical_words or not other_words:
        raise EmptyTrainingSetError("both training wordlists must be non-empty")
    if alpha <= 0:
        raise ValueError("alpha must be positive")

    counts = {cls: Counter() for cls in _CLASSES}
    for word in chemical_words:
        counts[CHEMICAL].update(extract_trigrams(word))
    for word in other_words:
        counts[NON_CHEMICAL].update(extract_trigrams(word))

    vocabulary = set(counts[CHEMICAL]) | set(counts[NON_CHEMICAL])
    v = len(vocabulary)

    total_words = len(chemical_words) + len(other_words)
    priors = {
        CHEMICAL: math.log(len(chemical_words) / total_words),
        NON_CHEMICAL: math.log(len(other_words) / total_words),
    }
    likelihoods: dict[tuple[str, str], float] = {}
    unseen: dict[str, float] = {}
    for cls in _CLASSES:
        total = sum(counts[cls].values())
        denom = total + alpha * (v + 1)  # +1 outcome for the unseen bucket
        for trigram in vocabulary:
            likelihoods[(trigram, cls)] = math.log(
                (counts[cls][trigram] + alpha) / denom
            )
        unseen[cls] = math.log(alpha / denom)

    model = BayesModel(
        class_log_priors=priors,
        trigram_log_likelihoods=likelihoods,
        unseen_log_likelihoods=unseen,
        vocabulary_size=v,
        smoothing_alpha=alpha,
    )
    model.validate()
    return model


def classify_bayes(model: BayesModel, word: str) -> tuple[str, float]:
    """Maximum-posterior label plus the winning-minus-losing log margin.

    Ties break to non-chemical.
    """
    trigrams = extract_trigrams(word)
    scores = {}
    for cls in _CLASSES:
        score = model.class_log_priors[cls]
        for trigram in trigrams:
            score += model.trigram_log_likelihoods.get(
                (trigram, cls), model.unseen_log_likelihoods[cls]
            )
        scores[cls] = score
    if scores[CHEMICAL] > scores[NON_CHEMICAL]:
        return CHEMICAL, scores[CHEMICAL] - scores[NON_CHEMICAL]
    return NON_CHEMICAL, scores[NON_CHEMICAL] - scores[CHEMICAL]


# ---------------------------------------------------------------------------
# Pattern rules


@dataclass(frozen=True)
class Rule:
    name: str
    predicate: Callable[[str], bool]

    def matches(self, word: str) -> bool:
        return bool(word) and self.predicate(word)


@dataclass(frozen=True)
class RuleSet:
    rules: tuple[Rule, ...] = field(default_factory=tuple)


def classify_rules(rules: RuleSet, word: str) -> bool:
    return any(rule.matches(word) for rule in rules.rules)


def is_chemical(model: BayesModel, rules: RuleSet, word: str) -> bool:
    """AND combination of the two classifiers."""
    if not word:
        return False
    if not classify_rules(rules, word):
        return False
    label, _ = classify_bayes(model, word)
    return label == CHEMICAL


_ELEMENTS = (
    "He|Li|Be|Ne|Na|Mg|Al|Si|Cl|Ar|Ca|Ti|Cr|Mn|Fe|Co|Ni|Cu|Zn|Br|Kr|Ag|Sn|Xe|Pt|Au|Hg|Pb"
    "|H|B|C|N|O|F|P|S|K|I|W|U"
)
_FORMULA_RE = re.compile(r"(?:(?:%s)\d*){2,}" % _ELEMENTS)
_SUFFIXES = ("yl", "ene", "yne", "ol", "one", "ide", "ane", "ate", "ine")


def _make_regex_rule(name: str, pattern: str, full: bool = False) -> Rule:
    compiled = re.compile(pattern)
    check = compiled.fullmatch if full else compiled.search
    return Rule(name, lambda w: check(w) is not None)


def _make_suffix_rule(name: str, suffixes: Sequence[str], min_len: int) -> Rule:
    sufs = tuple(suffixes)

    def pred(word: str) -> bool:
        w = word.lower()
        return len(w) >= min_len and w.isalpha() and w.endswith(sufs)

    return Rule(name, pred)


def _make_morpheme_rule(name: str, morphemes: Sequence[str], min_count: int) -> Rule:
    # longest-first alternation so overlapping morphemes are not double-counted
    ordered = sorted(set(morphemes), key=len, reverse=True)
    pattern = re.compile("|".join(re.escape(m) for m in ordered))

    def pred(word: str) -> bool:
        return len(pattern.findall(word.lower())) >= min_count

    return Rule(name, pred)


def default_morphemes() -> tuple[str, ...]:
    from .resources import load_wordlist, data_path

    return tuple(load_wordlist(data_path("morphemes.txt")))


def default_rules(morphemes: Sequence[str] | None = None) -> RuleSet:
    """The 7 bundled pattern rules."""
    if morphemes is None:
        morphemes = default_morphemes()
    return RuleSet(rules=(
        _make_regex_rule("locant-prefix", r"^\d+(,\d+)*-"),
        _make_suffix_rule("chemical-suffix", _SUFFIXES, min_len=6),
        Rule("element-formula",
             lambda w: len(w) >= 2 and any(c.isdigit() for c in w)
             and _FORMULA_RE.fullmatch(w) is not None),
        _make_regex_rule("stereo-prefix", r"^\((?:R|S|E|Z|±|\+/?-)\)-"),
        _make_regex_rule("locant-hyphen", r"[A-Za-z]-\d|\d(,\d+)*-[A-Za-z]"),
        _make_regex_rule("greek-prefix", r"^(?:[αβγδ]|alpha|beta|gamma|delta)-"),
        _make_morpheme_rule("morpheme-pair", morphemes, min_count=2),
    ))


def load_rules(path: str | Path) -> RuleSet:
    """Rule file: ``name<TAB>kind<TAB>argument`` per line, '#' comments.

    Kinds: ``regex`` / ``fullregex`` (argument is a pattern), ``suffix``
    (argument ``minlen:suf1,suf2,...``), ``morphemes`` (argument
    ``mincount:m1,m2,...``).
    """
    rules = []
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise FormatError(f"{path}:{lineno}: expected 3 tab-separated fields")
        name, kind, arg = parts
        try:
            if kind == "regex":
                rules.append(_make_regex_rule(name, arg))
            elif kind == "fullregex":
                rules.append(_make_regex_rule(name, arg, full=True))
            elif kind == "suffix":
                head, tail = arg.split(":", 1)
                rules.append(_make_suffix_rule(name, tail.split(","), int(head)))
            elif kind == "morphemes":
                head, tail = arg.split(":", 1)
                rules.append(_make_morpheme_rule(name, tail.split(","), int(head)))
            else:
                raise FormatError(f"{path}:{lineno}: unknown rule kind {kind!r}")
        except (ValueError, re.error) as exc:
            raise FormatError(f"{path}:{lineno}: bad rule argument ({exc})") from exc
    return RuleSet(rules=tuple(rules))


# ---------------------------------------------------------------------------
# Model persistence (line-oriented text, tab-separated, UTF-8)


def save_model(model: BayesModel, path: str | Path) -> None:
    lines = [
        f"alpha\t{model.smoothing_alpha!r}",
        f"vocabulary_size\t{model.vocabulary_size}",
    ]
    for cls in _CLASSES:
        lines.append(f"prior\t{cls}\t{model.class_log_priors[cls]!r}")
    for cls in _CLASSES:
        lines.append(f"{_UNSEEN}\t{cls}\t{model.unseen_log_likelihoods[cls]!r}")
    for (trigram, cls), lp in sorted(model.trigram_log_likelihoods.items()):
        lines.append(f"{trigram}\t{cls}\t{lp!r}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_model(path: str | Path) -> BayesModel:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise OSError(f"{path}: not valid UTF-8") from exc
    alpha = None
    vocab_size = None
    priors: dict[str, float] = {}
    unseen: dict[str, float] = {}
    likelihoods: dict[tuple[str, str], float] = {}
    try:
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            parts = line.split("\t")
            if parts[0] == "alpha" and len(parts) == 2:
                alpha = float(parts[1])
            elif parts[0] == "vocabulary_size" and len(parts) == 2:
                vocab_size = int(parts[1])
            elif parts[0] == "prior" and len(parts) == 3:
                priors[parts[1]] = float(parts[2])
            elif len(parts) == 3 and parts[0] == _UNSEEN:
                unseen[parts[1]] = float(parts[2])
            elif len(parts) == 3:
                likelihoods[(parts[0], parts[1])] = float(parts[2])
            else:
                raise FormatError(f"{path}:{lineno}: malformed line")
    except ValueError as exc:
        raise FormatError(f"{path}: bad numeric field ({exc})") from exc
    if alpha is None or vocab_size is None or not priors or not unseen:
        raise FormatError(f"{path}: incomplete model header")
    model = BayesModel(
        class_log_priors=priors,
        trigram_log_likelihoods=likelihoods,
        unseen_log_likelihoods=unseen,
        vocabulary_size=vocab_size,
        smoothing_alpha=alpha,
    )
    model.validate()
    return model
