"""Core corpus types: samples, label maps, dataset recipes, split assignments."""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field, replace
from typing import Any, Iterable, Mapping

from ..errors import ConfigError, LabelMapError, SplitError

DECEPTIVE = "deceptive"
NON_DECEPTIVE = "non_deceptive"
LABELS = (NON_DECEPTIVE, DECEPTIVE)

SPLITS = ("train", "val", "test")

# Canonical dataset identifiers, in benchmark-report row order.
DATASET_IDS = (
    "pheme",
    "liar",
    "fnn_gossipcop",
    "fnn_politifact",
    "rashkin_politifact",
    "rashkin_newsfiles",
    "covid_zenodo",
    "covid_aaai",
    "enron",
    "sms",
)

NORMALIZATION_VERSION = "nfc-ws-v1"

_WS_RUN = re.compile(r"\s+")


def normalize_text(text: str) -> str:
    """Unicode NFC, drop control/format chars, collapse whitespace runs.

    Casing is preserved; backends decide their own casing.
    """
    t = unicodedata.normalize("NFC", text)
    t = "".join(ch for ch in t if ch in " \t\n\r" or unicodedata.category(ch) not in ("Cc", "Cf"))
    return _WS_RUN.sub(" ", t).strip()


@dataclass(frozen=True)
class TextSample:
    """One text with its unified binary label and provenance."""

    id: str
    text: str
    label: str
    dataset_id: str
    original_label: str
    split: str
    event_tag: str | None = None

    def __post_init__(self):
        if self.label not in LABELS:
            raise ValueError(f"bad label {self.label!r} for sample {self.id!r}")
        if self.split not in SPLITS:
            raise ValueError(f"bad split {self.split!r} for sample {self.id!r}")
        if not self.text:
            raise ValueError(f"empty text for sample {self.id!r}")

    def with_split(self, split: str) -> "TextSample":
        return replace(self, split=split)


@dataclass(frozen=True)
class LabelMap:
    """Ordered mapping from original labels to the binary schema.

    Patterns match case-insensitively against the stripped original label.
    Labels matching a drop rule are excluded from the corpus entirely.
    """

    dataset_id: str
    rules: tuple[tuple[str, str], ...]
    drop_rules: tuple[str, ...] = ()

    def __post_init__(self):
        seen = set()
        for pattern, label in self.rules:
            key = pattern.strip().lower()
            if key in seen:
                raise ConfigError(f"{self.dataset_id}: duplicate label rule {pattern!r}")
            seen.add(key)
            if label not in LABELS:
                raise ConfigError(f"{self.dataset_id}: rule {pattern!r} maps to bad label {label!r}")
        for pattern in self.drop_rules:
            if pattern.strip().lower() in seen:
                raise ConfigError(f"{self.dataset_id}: {pattern!r} is both a rule and a drop rule")

    def apply(self, original_label: str) -> str | None:
        """Binary label for an observed original label, or None when dropped."""
        key = str(original_label).strip().lower()
        for pattern, label in self.rules:
            if key == pattern.strip().lower():
                return label
        for pattern in self.drop_rules:
            if key == pattern.strip().lower():
                return None
        raise LabelMapError(
            f"{self.dataset_id}: original label {original_label!r} matches no rule or drop rule"
        )


@dataclass(frozen=True)
class RawFile:
    """One raw input file with its optional provided-split role and constant label."""

    path: str
    split: str | None = None
    label: str | None = None  # constant original label for every row in the file


@dataclass(frozen=True)
class DirectoryClass:
    """One glob class for directory-of-files datasets; label comes from the glob."""

    glob: str
    original_label: str


@dataclass(frozen=True)
class ExpectedCounts:
    total: int | None = None
    deceptive: int | None = None
    non_deceptive: int | None = None
    splits: Mapping[str, int] | None = None


@dataclass(frozen=True)
class DatasetSpec:
    """Ingestion recipe for one dataset.

    raw_format is one of "delimited", "directory", "tweet_tree".
    text_fields/label_field are header names or integer column indexes.
    """

    dataset_id: str
    raw_format: str
    label_map: LabelMap
    files: tuple[RawFile, ...] = ()
    directory_classes: tuple[DirectoryClass, ...] = ()
    delimiter: str = ","
    has_header: bool = True
    text_fields: tuple[Any, ...] = ()
    label_field: Any = None
    id_field: Any = None
    provided_splits: bool = False
    expected: ExpectedCounts = field(default_factory=ExpectedCounts)
    event_tag: str | None = None
    category: str | None = None

    def __post_init__(self):
        if self.raw_format not in ("delimited", "directory", "tweet_tree"):
            raise ConfigError(f"{self.dataset_id}: unknown raw_format {self.raw_format!r}")
        if self.provided_splits:
            roles = {f.split for f in self.files}
            if "test" not in roles or "train" not in roles:
                raise ConfigError(
                    f"{self.dataset_id}: provided_splits requires files with train and test roles"
                )


@dataclass(frozen=True)
class SplitAssignment:
    """Mapping id -> split produced by one split policy run."""

    mapping: Mapping[str, str]
    seed: int
    policy: str  # "provided" | "random_60_20_20"

    def apply(self, samples: Iterable[TextSample]) -> list[TextSample]:
        out = []
        for s in samples:
            try:
                out.append(s.with_split(self.mapping[s.id]))
            except KeyError:
                raise SplitError(f"sample {s.id!r} missing from split assignment") from None
        return out
