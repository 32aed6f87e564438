"""Term space and term-by-sentence frequency matrix."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import EmptyDocumentError, UnknownTermError
from .preproc import ProcessedSentence


@dataclass(frozen=True)
class TermSpace:
    term_to_index: dict[str, int]  # 0-based column indices

    @property
    def n(self) -> int:
        return len(self.term_to_index)


@dataclass(frozen=True)
class TermMatrix:
    cells: np.ndarray  # shape (m, n), non-negative integers

    @property
    def m(self) -> int:
        return self.cells.shape[0]

    @property
    def n(self) -> int:
        return self.cells.shape[1]


def build_term_space(
    sentences: Sequence[ProcessedSentence],
    title: ProcessedSentence | None = None,
) -> TermSpace:
    """Columns in first-occurrence order over sentences, then title terms."""
    mapping: dict[str, int] = {}
    for sentence in sentences:
        for term in sentence.terms:
            if term not in mapping:
                mapping[term] = len(mapping)
    if not mapping:
        raise EmptyDocumentError("no sentence term survived preprocessing")
    if title is not None:
        # title-only terms get trailing columns so cosine dimensions agree
        for term in title.terms:
            if term not in mapping:
                mapping[term] = len(mapping)
    return TermSpace(term_to_index=mapping)


def _count_row(terms: Sequence[str], space: TermSpace) -> np.ndarray:
    row = np.zeros(space.n, dtype=np.int64)
    for term in terms:
        try:
            row[space.term_to_index[term]] += 1
        except KeyError:
            raise UnknownTermError(f"term {term!r} missing from term space") from None
    return row


def build_matrix(
    sentences: Sequence[ProcessedSentence], space: TermSpace
) -> TermMatrix:
    rows = [_count_row(s.terms, space) for s in sentences]
    cells = np.vstack(rows) if rows else np.zeros((0, space.n), dtype=np.int64)
    return TermMatrix(cells=cells)


def title_vector(title: ProcessedSentence, space: TermSpace) -> np.ndarray:
    return _count_row(title.terms, space)
