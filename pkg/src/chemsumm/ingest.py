"""Document and corpus loading.

Corpus layout: ``<dir>/<id>.txt`` holds a document (first non-empty line is
the title, the rest is the body); an optional sibling ``<dir>/<id>.ref.txt``
holds the reference abstract as plain text.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import EmptyCorpusError, EmptyInputError


@dataclass(frozen=True)
class RawDocument:
    title: str
    body: str
    source_id: str = "<string>"


@dataclass(frozen=True)
class CorpusEntry:
    document: RawDocument
    reference_abstract: str | None = None


def parse_document(raw: str, source_id: str = "<string>") -> RawDocument:
    """First non-empty line becomes the title, the remainder the body."""
    lines = raw.splitlines()
    title_idx = None
    for i, line in enumerate(lines):
        if line.strip():
            title_idx = i
            break
    if title_idx is None:
        raise EmptyInputError(f"{source_id}: no non-empty line found")
    title = lines[title_idx].strip()
    rest = lines[title_idx + 1:]
    while rest and not rest[0].strip():
        rest.pop(0)
    while rest and not rest[-1].strip():
        rest.pop()
    return RawDocument(title=title, body="\n".join(rest), source_id=source_id)


def render_document(doc: RawDocument) -> str:
    """Inverse of parse_document, up to leading/trailing blank lines."""
    return doc.title + "\n\n" + doc.body


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise OSError(f"{path}: not valid UTF-8 ({exc})") from exc


def load_document(path: str | Path) -> RawDocument:
    path = Path(path)
    return parse_document(_read_text(path), source_id=path.stem)


def load_corpus(directory: str | Path) -> list[CorpusEntry]:
    """Load every ``<id>.txt`` in the directory, sorted by id."""
    directory = Path(directory)
    if not directory.is_dir():
        raise OSError(f"{directory}: not a directory")
    doc_paths = sorted(
        p for p in directory.glob("*.txt") if not p.name.endswith(".ref.txt")
    )
    if not doc_paths:
        raise EmptyCorpusError(f"{directory}: no .txt document found")
    entries = []
    for doc_path in doc_paths:
        document = parse_document(_read_text(doc_path), source_id=doc_path.stem)
        ref_path = doc_path.with_name(doc_path.stem + ".ref.txt")
        reference = None
        if ref_path.exists():
            reference = _read_text(ref_path)
            if not reference.strip():
                raise EmptyInputError(f"{ref_path}: reference abstract is empty")
        entries.append(CorpusEntry(document=document, reference_abstract=reference))
    return entries
