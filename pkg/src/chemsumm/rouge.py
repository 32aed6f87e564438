"""Recall-oriented n-gram evaluation: ROUGE-1, ROUGE-2 and ROUGE-SU4."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import NoReferenceError
from .stemmer import porter_stem

_TOKEN_RE = re.compile(r"[a-z0-9]+")


@dataclass(frozen=True)
class RougeScore:
    rouge1: float
    rouge2: float
    su4: float


def eval_tokenize(text: str, stem: bool = False) -> list[str]:
    """Lowercase alphanumeric tokens; optional Porter stemming."""
    tokens = _TOKEN_RE.findall(text.lower())
    if stem:
        tokens = [porter_stem(t) for t in tokens]
    return tokens


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def skip_bigrams(tokens: Sequence[str], max_gap: int = 4) -> Counter:
    """Ordered pairs (tokens[i], tokens[j]) with 0 < j - i <= max_gap."""
    pairs = Counter()
    for i in range(len(tokens)):
        for j in range(i + 1, min(i + max_gap + 1, len(tokens))):
            pairs[(tokens[i], tokens[j])] += 1
    return pairs


def _clipped_recall(candidate: Counter, references: Sequence[Counter]) -> float:
    pooled = Counter()
    for ref in references:
        pooled.update(ref)
    total = sum(pooled.values())
    if total == 0:
        return 0.0
    matched = sum(min(count, candidate[unit]) for unit, count in pooled.items())
    return matched / total


def rouge_n(
    candidate: Sequence[str], references: Sequence[Sequence[str]], n: int
) -> float:
    if n not in (1, 2):
        raise ValueError("n must be 1 or 2")
    if not references:
        raise NoReferenceError("at least one reference is required")
    return _clipped_recall(
        _ngrams(candidate, n), [_ngrams(ref, n) for ref in references]
    )


def _su4_units(tokens: Sequence[str], max_gap: int = 4) -> Counter:
    units = skip_bigrams(tokens, max_gap)
    units.update((t,) for t in tokens)  # the unigram component
    return units


def rouge_su4(
    candidate: Sequence[str], references: Sequence[Sequence[str]]
) -> float:
    if not references:
        raise NoReferenceError("at least one reference is required")
    return _clipped_recall(
        _su4_units(candidate), [_su4_units(ref) for ref in references]
    )


def score_summary(
    candidate_text: str, reference_texts: Sequence[str], stem: bool = False
) -> RougeScore:
    candidate = eval_tokenize(candidate_text, stem=stem)
    references = [eval_tokenize(t, stem=stem) for t in reference_texts]
    return RougeScore(
        rouge1=rouge_n(candidate, references, 1),
        rouge2=rouge_n(candidate, references, 2),
        su4=rouge_su4(candidate, references),
    )


def mean_score(scores: Sequence[RougeScore]) -> RougeScore:
    if not scores:
        raise NoReferenceError("no scores to average")
    k = len(scores)
    return RougeScore(
        rouge1=sum(s.rouge1 for s in scores) / k,
        rouge2=sum(s.rouge2 for s in scores) / k,
        su4=sum(s.su4 for s in scores) / k,
    )


def evaluate_corpus(
    entries: Sequence[tuple[str, str, str]], stem: bool = False
) -> tuple[list[tuple[str, RougeScore]], RougeScore]:
    """Score (id, candidate_text, reference_text) triples; unweighted mean."""
    per_doc = []
    for doc_id, candidate, reference in entries:
        if reference is None:
            raise NoReferenceError(f"{doc_id}: no reference abstract")
        per_doc.append((doc_id, score_summary(candidate, [reference], stem=stem)))
    return per_doc, mean_score([s for _, s in per_doc])
