"""Delimited report rendering plus matplotlib figures saved next to them."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .metrics import METRIC_NAMES
from .rouge import RougeScore
from .scorer import SentenceReport


def format_metric_report(rows: Sequence[SentenceReport], fmt: str = "tsv") -> str:
    """Per-sentence metric dump: raw values, normalized values, score, flag."""
    if fmt == "json":
        payload = [
            {
                "index": row.index,
                "raw": row.raw.as_dict(),
                "normalized": row.normalized,
                "combined": row.combined,
                "selected": row.selected,
            }
            for row in rows
        ]
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    header = (
        ["index"]
        + [f"raw_{m}" for m in METRIC_NAMES]
        + [f"norm_{m}" for m in METRIC_NAMES]
        + ["combined", "selected"]
    )
    lines = ["\t".join(header)]
    for row in rows:
        raw = row.raw.as_dict()
        fields = [str(row.index)]
        fields += [f"{raw[m]:.5f}" for m in METRIC_NAMES]
        fields += [f"{row.normalized[m]:.5f}" for m in METRIC_NAMES]
        fields += [f"{row.combined:.5f}", "1" if row.selected else "0"]
        lines.append("\t".join(fields))
    return "\n".join(lines) + "\n"


def format_rouge_table(
    per_doc: Sequence[tuple[str, RougeScore]], mean: RougeScore | None = None,
    mean_label: str = "MEAN",
) -> str:
    """Rows ``id<TAB>rouge1<TAB>rouge2<TAB>su4`` with 5 decimals."""
    lines = ["id\trouge1\trouge2\tsu4"]
    for doc_id, score in per_doc:
        lines.append(
            f"{doc_id}\t{score.rouge1:.5f}\t{score.rouge2:.5f}\t{score.su4:.5f}"
        )
    if mean is not None:
        lines.append(
            f"{mean_label}\t{mean.rouge1:.5f}\t{mean.rouge2:.5f}\t{mean.su4:.5f}"
        )
    return "\n".join(lines) + "\n"


def _grouped_bars(labels, scores: Sequence[RougeScore], title: str, path: Path):
    fig, ax = plt.subplots(figsize=(max(6, 0.9 * len(labels) + 2), 4))
    xs = range(len(labels))
    width = 0.27
    ax.bar([x - width for x in xs], [s.rouge1 for s in scores], width, label="ROUGE-1")
    ax.bar(list(xs), [s.rouge2 for s in scores], width, label="ROUGE-2")
    ax.bar([x + width for x in xs], [s.su4 for s in scores], width, label="ROUGE-SU4")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=45, ha="right")
    ax.set_ylabel("recall")
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def render_rouge_figure(
    per_doc: Sequence[tuple[str, RougeScore]],
    mean: RougeScore | None,
    path: str | Path,
    title: str = "ROUGE recall per document",
) -> None:
    labels = [doc_id for doc_id, _ in per_doc]
    scores = [score for _, score in per_doc]
    if mean is not None:
        labels.append("MEAN")
        scores.append(mean)
    _grouped_bars(labels, scores, title, Path(path))


def render_ablation_figure(
    rows: Sequence[tuple[str, RougeScore]], path: str | Path
) -> None:
    _grouped_bars(
        [label for label, _ in rows],
        [score for _, score in rows],
        "ROUGE recall per metric subset",
        Path(path),
    )


def render_score_figure(rows: Sequence[SentenceReport], path: str | Path) -> None:
    """Combined score per sentence, selected sentences highlighted."""
    fig, ax = plt.subplots(figsize=(8, 4))
    xs = [row.index for row in rows]
    ys = [row.combined for row in rows]
    colors = ["tab:red" if row.selected else "tab:blue" for row in rows]
    ax.bar(xs, ys, color=colors)
    ax.set_xlabel("sentence")
    ax.set_ylabel("combined score")
    ax.set_title("Sentence scores (selected in red)")
    fig.tight_layout()
    fig.savefig(Path(path))
    plt.close(fig)
