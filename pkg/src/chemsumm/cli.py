"""Command-line interface.

Subcommands: summarize, evaluate, ablate, baseline, train-ner, metrics-dump.
``CHEMSUMM_CONFIG`` may point at a JSON file holding flag defaults; explicit
flags always win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import chemner, report, resources, rouge, scorer
from .errors import ChemSummError
from .ingest import load_corpus, load_document
from .metrics import METRIC_NAMES
from .preproc import load_stopwords
from .segmenter import load_abbreviations

_CONFIG_ENV = "CHEMSUMM_CONFIG"


def _load_file_config() -> dict:
    path = os.environ.get(_CONFIG_ENV)
    if not path:
        return {}
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ChemSummError(f"config file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ChemSummError(f"config file {path}: expected a JSON object")
    return data


def _resolved(args: argparse.Namespace, key: str, file_config: dict, default):
    value = getattr(args, key, None)
    if value is not None:
        return value
    if key in file_config:
        return file_config[key]
    return default


def _build_config(args: argparse.Namespace) -> scorer.SummaryConfig:
    fc = _load_file_config()
    stoplist_path = _resolved(args, "stoplist", fc, None)
    abbrev_path = _resolved(args, "abbrev", fc, None)
    model_path = _resolved(args, "model", fc, None)
    rules_path = _resolved(args, "rules", fc, None)
    metrics = _resolved(args, "metrics", fc, None)
    if isinstance(metrics, str):
        metrics = tuple(m.strip() for m in metrics.split(",") if m.strip())
    return scorer.SummaryConfig(
        stoplist=(load_stopwords(stoplist_path) if stoplist_path
                  else resources.default_stopwords()),
        abbreviations=(load_abbreviations(abbrev_path) if abbrev_path
                       else resources.default_abbreviations()),
        model=(chemner.load_model(model_path) if model_path
               else resources.default_model()),
        rules=(chemner.load_rules(rules_path) if rules_path
               else resources.default_rules()),
        ratio=float(_resolved(args, "ratio", fc, scorer.DEFAULT_RATIO)),
        min_sentences=int(
            _resolved(args, "min_sentences", fc, scorer.DEFAULT_MIN_SENTENCES)
        ),
        enabled_metrics=tuple(metrics) if metrics else METRIC_NAMES,
    )


def _require_references(entries):
    missing = [e.document.source_id for e in entries if e.reference_abstract is None]
    if missing:
        raise ChemSummError(
            "entries without a reference abstract: " + ", ".join(missing)
        )


def _summarize_corpus(entries, config):
    triples = []
    for entry in entries:
        result = scorer.summarize(entry.document, config)
        triples.append(
            (entry.document.source_id, result.extract.text, entry.reference_abstract)
        )
    return triples


def _figure_path(figures_dir: str, name: str) -> Path:
    directory = Path(figures_dir)
    directory.mkdir(parents=True, exist_ok=True)
    return directory / name


def cmd_summarize(args) -> int:
    config = _build_config(args)
    document = load_document(args.document)
    result = scorer.summarize(document, config)
    print(result.extract.text)
    if args.report:
        Path(args.report).write_text(
            report.format_metric_report(result.rows, args.format), encoding="utf-8"
        )
    if args.figures:
        report.render_score_figure(
            result.rows, _figure_path(args.figures, f"{document.source_id}_scores.png")
        )
    return 0


def cmd_metrics_dump(args) -> int:
    config = _build_config(args)
    document = load_document(args.document)
    result = scorer.summarize(document, config)
    sys.stdout.write(report.format_metric_report(result.rows, args.format))
    if args.figures:
        report.render_score_figure(
            result.rows, _figure_path(args.figures, f"{document.source_id}_scores.png")
        )
    return 0


def cmd_evaluate(args) -> int:
    config = _build_config(args)
    entries = load_corpus(args.corpus)
    _require_references(entries)
    triples = _summarize_corpus(entries, config)
    per_doc, mean = rouge.evaluate_corpus(triples, stem=args.rouge_stem)
    text = report.format_rouge_table(per_doc, mean)
    sys.stdout.write(text)
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    if args.figures:
        report.render_rouge_figure(
            per_doc, mean, _figure_path(args.figures, "evaluation.png")
        )
    return 0


def cmd_ablate(args) -> int:
    config = _build_config(args)
    entries = load_corpus(args.corpus)
    _require_references(entries)
    rows = []
    subsets = [(name, (name,)) for name in METRIC_NAMES] + [("All", METRIC_NAMES)]
    for label, subset in subsets:
        triples = []
        for entry in entries:
            result = scorer.ablate(entry.document, config, subset)
            triples.append(
                (entry.document.source_id, result.extract.text,
                 entry.reference_abstract)
            )
        _, mean = rouge.evaluate_corpus(triples, stem=args.rouge_stem)
        rows.append((label, mean))
    text = report.format_rouge_table(rows)
    sys.stdout.write(text)
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    if args.figures:
        report.render_ablation_figure(
            rows, _figure_path(args.figures, "ablation.png")
        )
    return 0


def cmd_baseline(args) -> int:
    config = _build_config(args)
    entries = load_corpus(args.corpus)
    _require_references(entries)
    per_doc = []
    for entry in entries:
        sentences = scorer.segment(entry.document.body, config.abbreviations)
        extracts = scorer.random_baseline(
            m=len(sentences),
            seed=args.seed,
            runs=args.runs,
            ratio=config.ratio,
            min_sentences=config.min_sentences,
            sentences=sentences,
        )
        scores = [
            rouge.score_summary(e.text, [entry.reference_abstract],
                                stem=args.rouge_stem)
            for e in extracts
        ]
        per_doc.append((entry.document.source_id, rouge.mean_score(scores)))
    mean = rouge.mean_score([s for _, s in per_doc])
    text = report.format_rouge_table(per_doc, mean)
    sys.stdout.write(text)
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    if args.figures:
        report.render_rouge_figure(
            per_doc, mean, _figure_path(args.figures, "baseline.png"),
            title="Random-baseline ROUGE recall per document",
        )
    return 0


def cmd_train_ner(args) -> int:
    chem = resources.load_wordlist(args.chemical)
    other = resources.load_wordlist(args.other)
    model = chemner.train_bayes(chem, other, alpha=args.alpha)
    chemner.save_model(model, args.out)
    print(f"model written to {args.out} "
          f"(vocabulary: {model.vocabulary_size} trigrams)")
    return 0


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--stoplist", help="stop-word file (one word per line)")
    parser.add_argument("--abbrev", help="abbreviation file for the segmenter")
    parser.add_argument("--model", help="trained chemical classifier model file")
    parser.add_argument("--rules", help="chemical pattern-rule file")
    parser.add_argument("--ratio", type=float, help="extract size as a sentence ratio")
    parser.add_argument("--min-sentences", dest="min_sentences", type=int,
                        help="minimum extract size in sentences")
    parser.add_argument("--metrics", help="comma-separated metric subset")
    parser.add_argument("--report", help="also write the report to this file")
    parser.add_argument("--format", choices=("tsv", "json"), default="tsv")
    parser.add_argument("--figures", help="directory for rendered figures")
    parser.add_argument("--rouge-stem", action="store_true",
                        help="Porter-stem tokens before ROUGE counting")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chemsumm",
        description="Extractive summarizer for chemistry documents",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("summarize", help="print the extract of one document")
    p.add_argument("document")
    _add_common_flags(p)
    p.set_defaults(func=cmd_summarize)

    p = sub.add_parser("metrics-dump", help="per-sentence metric report")
    p.add_argument("document")
    _add_common_flags(p)
    p.set_defaults(func=cmd_metrics_dump)

    p = sub.add_parser("evaluate", help="ROUGE-evaluate a corpus with references")
    p.add_argument("corpus")
    _add_common_flags(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("ablate", help="per-metric ablation table over a corpus")
    p.add_argument("corpus")
    _add_common_flags(p)
    p.set_defaults(func=cmd_ablate)

    p = sub.add_parser("baseline", help="seeded random-extract baseline scores")
    p.add_argument("corpus")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--runs", type=int, default=100)
    _add_common_flags(p)
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("train-ner", help="train the trigram chemical classifier")
    p.add_argument("chemical", help="wordlist of chemical names, one per line")
    p.add_argument("other", help="wordlist of non-chemical words, one per line")
    p.add_argument("out", help="output model path")
    p.add_argument("--alpha", type=float, default=1.0,
                   help="Laplace smoothing strength")
    p.set_defaults(func=cmd_train_ner)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ChemSummError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # internal invariant violation
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
