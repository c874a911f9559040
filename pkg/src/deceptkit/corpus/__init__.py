"""Corpus layer: ingestion, unified schema, splits, validation, persistence."""

from .ingest import IngestResult, ingest_dataset, map_label
from .schema import (
    DATASET_IDS,
    DECEPTIVE,
    LABELS,
    NON_DECEPTIVE,
    SPLITS,
    DatasetSpec,
    LabelMap,
    SplitAssignment,
    TextSample,
    normalize_text,
)
from .specs import builtin_specs, group_expected_counts, load_corpus_config
from .splits import PROVIDED, RANDOM_60_20_20, make_splits
from .store import Corpus, build_corpus, export_corpus, load_corpus
from .validate import ValidationReport, validate_corpus

__all__ = [
    "Corpus",
    "DATASET_IDS",
    "DECEPTIVE",
    "DatasetSpec",
    "IngestResult",
    "LABELS",
    "LabelMap",
    "NON_DECEPTIVE",
    "PROVIDED",
    "RANDOM_60_20_20",
    "SPLITS",
    "SplitAssignment",
    "TextSample",
    "ValidationReport",
    "build_corpus",
    "builtin_specs",
    "export_corpus",
    "group_expected_counts",
    "ingest_dataset",
    "load_corpus",
    "load_corpus_config",
    "make_splits",
    "map_label",
    "normalize_text",
    "validate_corpus",
]
