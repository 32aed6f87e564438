"""Sentence scoring, ranking, extract assembly and random baselines."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Sequence

from .chemner import BayesModel, RuleSet
from .errors import EmptyListError, EmptyMetricSetError
from .ingest import RawDocument
from .metrics import METRIC_NAMES, MetricVector, compute_all
from .preproc import ProcessedSentence, preprocess_sentence, preprocess_title
from .segmenter import Sentence, segment
from .vsm import build_matrix, build_term_space, title_vector

DEFAULT_RATIO = 0.05
DEFAULT_MIN_SENTENCES = 3


@dataclass(frozen=True)
class SummaryConfig:
    stoplist: frozenset[str]
    abbreviations: frozenset[str]
    model: BayesModel
    rules: RuleSet
    ratio: float = DEFAULT_RATIO
    min_sentences: int = DEFAULT_MIN_SENTENCES
    enabled_metrics: tuple[str, ...] = METRIC_NAMES

    def __post_init__(self):
        if not 0 < self.ratio <= 1:
            raise ValueError("ratio must lie in (0, 1]")
        if self.min_sentences < 1:
            raise ValueError("min_sentences must be >= 1")
        unknown = set(self.enabled_metrics) - set(METRIC_NAMES)
        if unknown:
            raise EmptyMetricSetError(f"unknown metric names: {sorted(unknown)}")
        if not self.enabled_metrics:
            raise EmptyMetricSetError("at least one metric must be enabled")


@dataclass(frozen=True)
class ScoredSentence:
    index: int
    normalized_metrics: dict[str, float]
    combined: float


@dataclass(frozen=True)
class Extract:
    selected: tuple[int, ...]  # sentence ordinals, strictly increasing
    text: str
    target_size: int


@dataclass(frozen=True)
class SentenceReport:
    index: int
    raw: MetricVector
    normalized: dict[str, float]
    combined: float
    selected: bool


@dataclass(frozen=True)
class SummaryResult:
    extract: Extract
    sentences: tuple[Sentence, ...]
    processed: tuple[ProcessedSentence, ...]
    title_terms: tuple[str, ...]
    rows: tuple[SentenceReport, ...] = field(default_factory=tuple)


def normalize(raw_values: Sequence[float]) -> list[float]:
    """Min-max scale to [0, 1]; a constant metric maps to 0.5 everywhere."""
    if len(raw_values) == 0:
        raise EmptyListError("cannot normalize an empty value list")
    lo = min(raw_values)
    hi = max(raw_values)
    if hi == lo:
        return [0.5] * len(raw_values)
    return [(v - lo) / (hi - lo) for v in raw_values]


def combine(normalized: Sequence[float]) -> float:
    """Equiprobable combination: the arithmetic mean."""
    if not normalized:
        raise EmptyMetricSetError("no metric values to combine")
    return sum(normalized) / len(normalized)


def rank(scored: Sequence[ScoredSentence]) -> list[ScoredSentence]:
    """Descending by score; ties go to the earlier sentence."""
    return sorted(scored, key=lambda s: (-s.combined, s.index))


def extract_size(m: int, ratio: float = DEFAULT_RATIO,
                 min_sentences: int = DEFAULT_MIN_SENTENCES) -> int:
    return min(m, max(min_sentences, math.ceil(ratio * m)))


def build_extract(
    ranked: Sequence[ScoredSentence],
    m: int,
    sentences: Sequence[Sentence],
    ratio: float = DEFAULT_RATIO,
    min_sentences: int = DEFAULT_MIN_SENTENCES,
) -> Extract:
    size = extract_size(m, ratio, min_sentences)
    chosen = sorted(s.index for s in ranked[:size])
    by_index = {s.index: s for s in sentences}
    text = " ".join(by_index[i].raw_text for i in chosen)
    return Extract(selected=tuple(chosen), text=text, target_size=size)


def random_baseline(
    m: int,
    seed: int,
    runs: int = 100,
    ratio: float = DEFAULT_RATIO,
    min_sentences: int = DEFAULT_MIN_SENTENCES,
    sentences: Sequence[Sentence] = (),
) -> list[Extract]:
    """Seeded uniform random extracts of the standard size."""
    size = extract_size(m, ratio, min_sentences)
    rng = random.Random(seed)
    by_index = {s.index: s for s in sentences}
    extracts = []
    for _ in range(runs):
        chosen = sorted(rng.sample(range(1, m + 1), size))
        text = " ".join(by_index[i].raw_text for i in chosen if i in by_index)
        extracts.append(Extract(selected=tuple(chosen), text=text, target_size=size))
    return extracts


def _score(
    vectors: Sequence[MetricVector], enabled: Sequence[str]
) -> list[ScoredSentence]:
    normalized_by_metric = {
        name: normalize([getattr(v, name) for v in vectors]) for name in METRIC_NAMES
    }
    scored = []
    for i in range(len(vectors)):
        norms = {name: normalized_by_metric[name][i] for name in METRIC_NAMES}
        scored.append(ScoredSentence(
            index=i + 1,
            normalized_metrics=norms,
            combined=combine([norms[name] for name in enabled]),
        ))
    return scored


def summarize(document: RawDocument, config: SummaryConfig) -> SummaryResult:
    """Full pipeline: segment, preprocess, score, rank, assemble."""
    sentences = segment(document.body, config.abbreviations)
    processed = [
        preprocess_sentence(s, config.stoplist, config.model, config.rules)
        for s in sentences
    ]
    title = preprocess_title(document.title, config.stoplist, config.model, config.rules)
    space = build_term_space(processed, title)
    matrix = build_matrix(processed, space)
    tvec = title_vector(title, space)
    vectors = compute_all(matrix, processed, tvec, title.terms)
    scored = _score(vectors, config.enabled_metrics)
    ranked = rank(scored)
    extract = build_extract(
        ranked, matrix.m, sentences, config.ratio, config.min_sentences
    )
    selected = set(extract.selected)
    by_index = {s.index: s for s in scored}
    rows = tuple(
        SentenceReport(
            index=i + 1,
            raw=vectors[i],
            normalized=by_index[i + 1].normalized_metrics,
            combined=by_index[i + 1].combined,
            selected=(i + 1) in selected,
        )
        for i in range(len(vectors))
    )
    return SummaryResult(
        extract=extract,
        sentences=tuple(sentences),
        processed=tuple(processed),
        title_terms=title.terms,
        rows=rows,
    )


def ablate(
    document: RawDocument,
    config: SummaryConfig,
    enabled_metrics: Sequence[str],
) -> SummaryResult:
    """Summarize with the combined score restricted to a metric subset."""
    if not enabled_metrics:
        raise EmptyMetricSetError("ablation needs a non-empty metric subset")
    restricted = SummaryConfig(
        stoplist=config.stoplist,
        abbreviations=config.abbreviations,
        model=config.model,
        rules=config.rules,
        ratio=config.ratio,
        min_sentences=config.min_sentences,
        enabled_metrics=tuple(enabled_metrics),
    )
    return summarize(document, restricted)
