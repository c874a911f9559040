"""Raw dataset ingestion: format readers, label mapping, count checks."""

from __future__ import annotations

import csv
import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from ..errors import IngestError
from .schema import DatasetSpec, LabelMap, RawFile, TextSample, normalize_text
from .specs import builtin_specs

csv.field_size_limit(10_000_000)


def map_label(dataset_id: str, original_label: str, label_map: LabelMap | None = None) -> str:
    """Binary label for an observed original label of one dataset.

    Deterministic and total over the labels the dataset's map covers;
    anything else raises LabelMapError. Returns None only via LabelMap.apply
    drop rules, which this wrapper converts into an explicit drop sentinel.
    """
    if label_map is None:
        label_map = builtin_specs()[dataset_id].label_map
    return label_map.apply(original_label)


@dataclass
class IngestResult:
    """Samples plus everything noteworthy that happened while reading them."""

    dataset_id: str
    samples: list[TextSample]
    warnings: list[str] = field(default_factory=list)
    dropped_by_rule: int = 0
    skipped_empty: int = 0
    raw_checksums: dict[str, str] = field(default_factory=dict)

    @property
    def counts(self) -> dict[str, int]:
        by_label = {"deceptive": 0, "non_deceptive": 0}
        for s in self.samples:
            by_label[s.label] += 1
        return {"total": len(self.samples), **by_label}


def _field_value(row, row_fields, spec: DatasetSpec, field_key, location: str):
    """Row value by header name or integer index."""
    if isinstance(field_key, int):
        if field_key >= len(row):
            raise IngestError(f"{location}: expected column {field_key}, row has {len(row)}")
        return row[field_key]
    if row_fields is None:
        raise IngestError(f"{location}: field {field_key!r} needs a header, none configured")
    try:
        idx = row_fields.index(field_key)
    except ValueError:
        raise IngestError(f"{location}: header has no field {field_key!r}") from None
    if idx >= len(row):
        raise IngestError(f"{location}: row too short for field {field_key!r}")
    return row[idx]


def _iter_delimited(spec: DatasetSpec, raw_file: RawFile, path: Path) -> Iterator[tuple[str, str, str, str]]:
    """Yield (row_key, text, original_label, location) from one delimited file."""
    try:
        handle = path.open("r", encoding="utf-8", errors="replace", newline="")
    except OSError as exc:
        raise IngestError(f"cannot open {path}: {exc}") from None
    with handle:
        reader = csv.reader(handle, delimiter=spec.delimiter, quoting=csv.QUOTE_MINIMAL)
        header = None
        for row_num, row in enumerate(reader):
            location = f"{path.name}:{row_num + 1}"
            if row_num == 0 and spec.has_header:
                header = [h.strip() for h in row]
                continue
            if not row or all(not c.strip() for c in row):
                continue
            try:
                parts = [
                    str(_field_value(row, header, spec, f, location)) for f in spec.text_fields
                ]
                text = " ".join(p for p in parts if p)
                if raw_file.label is not None:
                    original = raw_file.label
                elif spec.label_field is not None:
                    original = str(_field_value(row, header, spec, spec.label_field, location))
                else:
                    raise IngestError(f"{location}: no label field and no constant file label")
                if spec.id_field is not None:
                    row_key = str(_field_value(row, header, spec, spec.id_field, location))
                else:
                    row_key = f"{path.stem}:{row_num}"
            except IngestError:
                raise
            except Exception as exc:
                raise IngestError(f"{location}: unparseable row ({exc})") from None
            yield row_key, text, original, location


def _iter_directory(spec: DatasetSpec, root: Path) -> Iterator[tuple[str, str, str, str]]:
    for cls in spec.directory_classes:
        for file in sorted(root.glob(cls.glob)):
            try:
                text = file.read_text(encoding="utf-8", errors="replace")
            except OSError as exc:
                raise IngestError(f"cannot read {file}: {exc}") from None
            row_key = str(file.relative_to(root)).replace("\\", "/")
            yield row_key, text, cls.original_label, str(file)


def _iter_tweet_tree(spec: DatasetSpec, root: Path) -> Iterator[tuple[str, str, str, str, str]]:
    """Walk <event>/(rumours|non-rumours)/<thread>/source-tweet(s)/*.json trees."""
    events = sorted(p for p in root.iterdir() if p.is_dir())
    if not events:
        raise IngestError(f"{root}: no event directories found")
    for event_dir in events:
        for class_dir in sorted(p for p in event_dir.iterdir() if p.is_dir()):
            for thread_dir in sorted(p for p in class_dir.iterdir() if p.is_dir()):
                source_jsons = sorted(thread_dir.glob("source-tweet*/*.json"))
                if not source_jsons:
                    continue
                preferred = [p for p in source_jsons if p.stem == thread_dir.name]
                tweet_path = preferred[0] if preferred else source_jsons[0]
                try:
                    record = json.loads(tweet_path.read_text(encoding="utf-8", errors="replace"))
                except (OSError, json.JSONDecodeError) as exc:
                    raise IngestError(f"{tweet_path}: unparseable tweet JSON ({exc})") from None
                text = str(record.get("text", ""))
                row_key = f"{event_dir.name}/{thread_dir.name}"
                yield row_key, text, class_dir.name, str(tweet_path), event_dir.name


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    with path.open("rb") as f:
        for chunk in iter(lambda: f.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def ingest_dataset(spec: DatasetSpec, raw_location: str | Path) -> IngestResult:
    """Read one dataset's raw files into unified samples.

    Splits come from the provided-split file roles when the recipe declares
    them; otherwise every sample is staged as train and a split policy is
    applied afterwards. Count mismatches against the recipe's expected
    distribution become warnings on the result, never silent acceptance.
    """
    root = Path(raw_location)
    if not root.exists():
        raise IngestError(f"{spec.dataset_id}: raw location {root} does not exist")
    result = IngestResult(dataset_id=spec.dataset_id, samples=[])
    seen_ids: set[str] = set()

    def add(row_key: str, text: str, original: str, location: str, split: str | None,
            event_tag: str | None):
        normalized = normalize_text(text)
        if not normalized:
            result.skipped_empty += 1
            return
        label = spec.label_map.apply(original)
        if label is None:
            result.dropped_by_rule += 1
            return
        sample_id = f"{spec.dataset_id}:{row_key}"
        if sample_id in seen_ids:
            sample_id = f"{sample_id}#{len(result.samples)}"
            result.warnings.append(
                f"{spec.dataset_id}: duplicate source key {row_key!r} at {location}; suffixed"
            )
        seen_ids.add(sample_id)
        result.samples.append(
            TextSample(
                id=sample_id,
                text=normalized,
                label=label,
                dataset_id=spec.dataset_id,
                original_label=str(original),
                split=split or "train",
                event_tag=event_tag,
            )
        )

    if spec.raw_format == "delimited":
        for raw_file in spec.files:
            path = root / raw_file.path
            if not path.exists():
                raise IngestError(f"{spec.dataset_id}: missing raw file {path}")
            result.raw_checksums[raw_file.path] = _sha256(path)
            for row_key, text, original, location in _iter_delimited(spec, raw_file, path):
                add(row_key, text, original, location, raw_file.split, spec.event_tag)
    elif spec.raw_format == "directory":
        n_before = len(result.samples)
        for row_key, text, original, location in _iter_directory(spec, root):
            add(row_key, text, original, location, None, spec.event_tag)
        if len(result.samples) == n_before:
            result.warnings.append(f"{spec.dataset_id}: no files matched under {root}")
    elif spec.raw_format == "tweet_tree":
        for row_key, text, original, location, event in _iter_tweet_tree(spec, root):
            add(row_key, text, original, location, None, spec.event_tag or event)

    _check_counts(spec, result)
    return result


def _check_counts(spec: DatasetSpec, result: IngestResult) -> None:
    counts = result.counts
    exp = spec.expected
    pairs = (
        ("total", exp.total, counts["total"]),
        ("deceptive", exp.deceptive, counts["deceptive"]),
        ("non_deceptive", exp.non_deceptive, counts["non_deceptive"]),
    )
    for name, expected, actual in pairs:
        if expected is not None and actual != expected:
            result.warnings.append(
                f"{spec.dataset_id}: {name} count {actual} != expected {expected}"
            )
    if exp.splits:
        by_split: dict[str, int] = {}
        for s in result.samples:
            by_split[s.split] = by_split.get(s.split, 0) + 1
        for split, expected in exp.splits.items():
            actual = by_split.get(split, 0)
            if actual != expected:
                result.warnings.append(
                    f"{spec.dataset_id}: {split} split count {actual} != expected {expected}"
                )
    if result.skipped_empty:
        result.warnings.append(
            f"{spec.dataset_id}: skipped {result.skipped_empty} rows empty after normalization"
        )
