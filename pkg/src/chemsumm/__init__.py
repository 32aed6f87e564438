"""Extractive summarization of chemistry documents.

Library surface: document ingestion, sentence segmentation, chemical-aware
preprocessing, seven-metric sentence scoring, extract assembly, and ROUGE
recall evaluation.
"""

from .chemner import (
    BayesModel,
    RuleSet,
    classify_bayes,
    classify_rules,
    default_rules,
    extract_trigrams,
    is_chemical,
    load_model,
    save_model,
    train_bayes,
)
from .ingest import CorpusEntry, RawDocument, load_corpus, load_document, parse_document
from .metrics import METRIC_NAMES, MetricVector, compute_all, jaro, jaro_winkler, jw_extended
from .preproc import ProcessedSentence, preprocess_sentence, preprocess_title
from .resources import default_config
from .rouge import RougeScore, rouge_n, rouge_su4, score_summary
from .scorer import Extract, SummaryConfig, SummaryResult, ablate, random_baseline, summarize
from .segmenter import Sentence, segment
from .stemmer import porter_stem

__version__ = "0.1.0"

__all__ = [
    "BayesModel", "CorpusEntry", "Extract", "METRIC_NAMES", "MetricVector",
    "ProcessedSentence", "RawDocument", "RougeScore", "RuleSet", "Sentence",
    "SummaryConfig", "SummaryResult", "ablate", "classify_bayes",
    "classify_rules", "compute_all", "default_config", "default_rules",
    "extract_trigrams", "is_chemical", "jaro", "jaro_winkler", "jw_extended",
    "load_corpus", "load_document", "load_model", "parse_document",
    "porter_stem", "preprocess_sentence", "preprocess_title",
    "random_baseline", "rouge_n", "rouge_su4", "save_model", "score_summary",
    "segment", "summarize", "train_bayes",
]
