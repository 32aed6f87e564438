"""The seven sentence relevance metrics.

Title similarity (cosine and an extended Jaro-Winkler), parabolic position,
term-frequency sum, chemical presence, cross-sentence interaction, and a
Hamming pair weight computed on a derived triangular matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import EmptyTitleError, OutOfRangeError
from .preproc import ProcessedSentence
from .vsm import TermMatrix

METRIC_NAMES = ("cosine", "jw", "position", "freq", "chem", "interaction", "hamming")


# ---------------------------------------------------------------------------
# String similarity


def jaro(s1: str, s2: str) -> float:
    if s1 == s2:
        return 1.0
    if not s1 or not s2:
        return 0.0
    window = max(len(s1), len(s2)) // 2 - 1
    if window < 0:
        window = 0
    flags1 = [False] * len(s1)
    flags2 = [False] * len(s2)
    matches = 0
    for i, ch in enumerate(s1):
        lo = max(0, i - window)
        hi = min(len(s2), i + window + 1)
        for j in range(lo, hi):
            if not flags2[j] and s2[j] == ch:
                flags1[i] = flags2[j] = True
                matches += 1
                break
    if matches == 0:
        return 0.0
    # transpositions: matched characters out of order, halved
    m2 = [s2[j] for j in range(len(s2)) if flags2[j]]
    transpositions = sum(
        1 for a, b in zip((s1[i] for i in range(len(s1)) if flags1[i]), m2) if a != b
    ) / 2
    return (
        matches / len(s1)
        + matches / len(s2)
        + (matches - transpositions) / matches
    ) / 3


def jaro_winkler(
    s1: str, s2: str, prefix_scale: float = 0.1, max_prefix: int = 4
) -> float:
    if not 0 < prefix_scale <= 0.25:
        raise ValueError("prefix_scale must lie in (0, 0.25]")
    j = jaro(s1, s2)
    prefix = 0
    for a, b in zip(s1, s2):
        if a != b or prefix == max_prefix:
            break
        prefix += 1
    return j + prefix * prefix_scale * (1.0 - j)


def jw_extended(
    sentence_terms: Sequence[str], title_terms: Sequence[str]
) -> float:
    """Mean over title terms of the best available sentence-term similarity.

    Greedy in title order; a sentence term is consumed once it maximizes
    some title term.
    """
    if not title_terms:
        raise EmptyTitleError("title term list is empty")
    pool = list(sentence_terms)
    total = 0.0
    for wt in title_terms:
        if not pool:
            break
        best_idx = 0
        best = -1.0
        for i, wx in enumerate(pool):
            score = jaro_winkler(wt, wx)
            if score > best:
                best, best_idx = score, i
        total += best
        pool.pop(best_idx)
    return total / len(title_terms)


def cosine_title(sentence_row: np.ndarray, title_vec: np.ndarray) -> float:
    ns = float(np.linalg.norm(sentence_row))
    nt = float(np.linalg.norm(title_vec))
    if ns == 0.0 or nt == 0.0:
        return 0.0
    return float(np.dot(sentence_row, title_vec)) / (ns * nt)


# ---------------------------------------------------------------------------
# Positional and matrix metrics


def position_raw(x: int, m: int) -> float:
    """Signed offset of sentence x from the document middle, in [-1, 1]."""
    if m < 1 or not 1 <= x <= m:
        raise OutOfRangeError(f"sentence ordinal {x} outside 1..{m}")
    half = m / 2.0
    if m % 2 == 0:
        return ((x - 1) - (half - 1)) / half
    return ((x - 1) - half) / half


def position(x: int, m: int) -> float:
    """Square of the raw offset: high at both ends, low in the middle."""
    return position_raw(x, m) ** 2


def freq_sum(sentence_row: np.ndarray) -> float:
    return float(np.sum(sentence_row))


def chem_presence(sentence: ProcessedSentence) -> int:
    return 1 if sentence.chem_count >= 1 else 0


def interaction(matrix: TermMatrix, x: int) -> float:
    """Total frequency, in the other sentences, of the terms sentence x uses."""
    if not 1 <= x <= matrix.m:
        raise OutOfRangeError(f"sentence ordinal {x} outside 1..{matrix.m}")
    row = matrix.cells[x - 1]
    cols = np.nonzero(row)[0]
    if cols.size == 0:
        return 0.0
    col_totals = matrix.cells[:, cols].sum(axis=0) - row[cols]
    return float(col_totals.sum())


class HammingMatrix:
    """Pairwise term disagreement counts h(i, j), 1-based term indices.

    Only pairs that co-occur in some sentence are precomputed; any other
    pair is evaluated on demand from the source matrix.
    """

    def __init__(self, matrix: TermMatrix):
        self._cells = matrix.cells
        self.n = matrix.n
        self.m = matrix.m
        self._pairs: dict[tuple[int, int], int] = {}
        for row in self._cells:
            cols = np.nonzero(row)[0]
            for a in range(len(cols)):
                for b in range(a + 1, len(cols)):
                    key = (int(cols[a]), int(cols[b]))
                    if key not in self._pairs:
                        self._pairs[key] = self._count(*key)

    def _count(self, i0: int, j0: int) -> int:
        return int(np.count_nonzero(self._cells[:, i0] != self._cells[:, j0]))

    def get(self, i: int, j: int) -> int:
        """h(i, j) with 1-based indices; symmetric; 0 on the diagonal."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise OutOfRangeError(f"term pair ({i}, {j}) outside 1..{self.n}")
        if i == j:
            return 0
        i0, j0 = min(i, j) - 1, max(i, j) - 1
        cached = self._pairs.get((i0, j0))
        if cached is None:
            return self._count(i0, j0)
        return cached


def build_hamming_matrix(matrix: TermMatrix) -> HammingMatrix:
    return HammingMatrix(matrix)


def hamming_weight(matrix: TermMatrix, mh: HammingMatrix, x: int) -> float:
    """Sum of h(i, j) over term pairs both present in sentence x."""
    if not 1 <= x <= matrix.m:
        raise OutOfRangeError(f"sentence ordinal {x} outside 1..{matrix.m}")
    cols = np.nonzero(matrix.cells[x - 1])[0]
    total = 0
    for a in range(len(cols)):
        for b in range(a + 1, len(cols)):
            total += mh.get(int(cols[a]) + 1, int(cols[b]) + 1)
    return float(total)


# ---------------------------------------------------------------------------
# Per-sentence bundle


@dataclass(frozen=True)
class MetricVector:
    cosine: float
    jw: float
    position: float
    freq: float
    chem: float
    interaction: float
    hamming: float
    position_raw: float = 0.0  # signed value behind the squared metric

    def as_dict(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in METRIC_NAMES}


def compute_all(
    matrix: TermMatrix,
    sentences: Sequence[ProcessedSentence],
    title_vec: np.ndarray,
    title_terms: Sequence[str],
) -> list[MetricVector]:
    """All seven raw metrics for every sentence of one document.

    An empty preprocessed title zeroes both title similarities instead of
    failing, so degenerate documents still summarize.
    """
    m = matrix.m
    mh = build_hamming_matrix(matrix)
    vectors = []
    for idx, sentence in enumerate(sentences, start=1):
        row = matrix.cells[idx - 1]
        if len(title_terms) == 0:
            cos, jw = 0.0, 0.0
        else:
            cos = cosine_title(row, title_vec)
            jw = jw_extended(sentence.terms, title_terms)
        raw = position_raw(idx, m)
        vectors.append(MetricVector(
            cosine=cos,
            jw=jw,
            position=raw ** 2,
            freq=freq_sum(row),
            chem=float(chem_presence(sentence)),
            interaction=interaction(matrix, idx),
            hamming=hamming_weight(matrix, mh, idx),
            position_raw=raw,
        ))
    return vectors
