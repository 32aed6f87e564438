"""Rule-based sentence boundary detection with an abbreviation list."""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class Sentence:
    index: int  # 1-based ordinal within the document
    raw_text: str


_PARAGRAPH_RE = re.compile(r"\n\s*\n")
# candidate boundary: terminal punctuation, whitespace, then uppercase/digit
_BOUNDARY_RE = re.compile(r"[.!?]+(?=\s+[A-Z0-9])")


def load_abbreviations(path: str | Path) -> frozenset[str]:
    """One abbreviation per line, '#' starts a comment; lowercased, deduped."""
    entries = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        entry = line.lower()
        if not entry.endswith("."):
            entry += "."
        entries.add(entry)
    return frozenset(entries)


def _is_abbreviation(prefix: str, abbrevs: frozenset[str]) -> bool:
    """True if the text ending at a period ends with a known abbreviation."""
    tail = prefix.lower()
    for entry in abbrevs:
        if tail == entry or tail.endswith(" " + entry):
            return True
        # hyphen/parenthesis-attached forms like "(e.g." still count
        if tail.endswith(entry) and len(tail) > len(entry):
            prev = tail[-len(entry) - 1]
            if not prev.isalnum():
                return True
    return False


def _split_paragraph(paragraph: str, abbrevs: frozenset[str]) -> list[str]:
    pieces = []
    start = 0
    for match in _BOUNDARY_RE.finditer(paragraph):
        end = match.end()
        if "." in match.group(0) and _is_abbreviation(paragraph[:end], abbrevs):
            continue
        piece = paragraph[start:end].strip()
        if piece:
            pieces.append(piece)
        start = end
    last = paragraph[start:].strip()
    if last:
        pieces.append(last)
    return pieces


def segment(body: str, abbrevs: frozenset[str] = frozenset()) -> list[Sentence]:
    """Split a body into sentences; paragraph breaks always end a sentence."""
    pieces: list[str] = []
    for paragraph in _PARAGRAPH_RE.split(body):
        paragraph = " ".join(paragraph.split())
        if paragraph:
            pieces.extend(_split_paragraph(paragraph, abbrevs))

    # PDF-noise fragments (< 2 tokens) are merged into the preceding sentence
    merged: list[str] = []
    for piece in pieces:
        if merged and len(piece.split()) < 2:
            merged[-1] = merged[-1] + " " + piece
        else:
            merged.append(piece)

    return [Sentence(index=i, raw_text=text) for i, text in enumerate(merged, start=1)]
