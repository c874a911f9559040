"""Built-in dataset recipes and corpus-config loading."""

from __future__ import annotations

import importlib.resources
from pathlib import Path
from typing import Any

import yaml

from ..errors import ConfigError
from .schema import (
    DATASET_IDS,
    DatasetSpec,
    DirectoryClass,
    ExpectedCounts,
    LabelMap,
    RawFile,
)

CONFIG_VERSION = 1


def _builtin_yaml() -> dict:
    text = importlib.resources.files("deceptkit.data").joinpath("datasets.yaml").read_text("utf-8")
    return yaml.safe_load(text)


def _spec_from_dict(dataset_id: str, raw: dict[str, Any]) -> DatasetSpec:
    lm_raw = raw.get("label_map") or {}
    label_map = LabelMap(
        dataset_id=dataset_id,
        rules=tuple((str(r["pattern"]), r["label"]) for r in lm_raw.get("rules", [])),
        drop_rules=tuple(str(p) for p in lm_raw.get("drop", [])),
    )
    expected_raw = raw.get("expected_counts") or {}
    expected = ExpectedCounts(
        total=expected_raw.get("total"),
        deceptive=expected_raw.get("deceptive"),
        non_deceptive=expected_raw.get("non_deceptive"),
        splits=expected_raw.get("splits"),
    )
    files = tuple(
        RawFile(path=f["path"], split=f.get("split"), label=f.get("label"))
        for f in raw.get("files", [])
    )
    dir_classes = tuple(
        DirectoryClass(glob=c["glob"], original_label=c["original_label"])
        for c in raw.get("directory_classes", [])
    )
    return DatasetSpec(
        dataset_id=dataset_id,
        raw_format=raw["raw_format"],
        label_map=label_map,
        files=files,
        directory_classes=dir_classes,
        delimiter=raw.get("delimiter", ","),
        has_header=raw.get("has_header", True),
        text_fields=tuple(raw.get("text_fields", ())),
        label_field=raw.get("label_field"),
        id_field=raw.get("id_field"),
        provided_splits=raw.get("provided_splits", False),
        expected=expected,
        event_tag=raw.get("event_tag"),
        category=raw.get("category"),
    )


def builtin_specs() -> dict[str, DatasetSpec]:
    """The ten shipped dataset recipes keyed by dataset id."""
    data = _builtin_yaml()
    specs = {did: _spec_from_dict(did, raw) for did, raw in data["datasets"].items()}
    missing = set(DATASET_IDS) - set(specs)
    if missing:
        raise ConfigError(f"built-in recipe table is missing datasets: {sorted(missing)}")
    return specs


def group_expected_counts() -> dict[str, dict]:
    """Published combined count expectations spanning multiple dataset ids."""
    return _builtin_yaml().get("group_expected_counts") or {}


def _merge(base: dict, override: dict) -> dict:
    out = dict(base)
    for k, v in override.items():
        if isinstance(v, dict) and isinstance(out.get(k), dict):
            out[k] = _merge(out[k], v)
        else:
            out[k] = v
    return out


class CorpusConfig:
    """Parsed corpus config: per-dataset specs plus raw locations and seed."""

    def __init__(self, specs, raw_locations, seed, out_path, base_dir, groups=None):
        self.specs: dict[str, DatasetSpec] = specs
        self.raw_locations: dict[str, Path] = raw_locations
        self.seed: int = seed
        self.out_path: Path = out_path
        self.base_dir: Path = base_dir
        self.groups: dict | None = groups


def load_corpus_config(path: str | Path) -> CorpusConfig:
    """Load a corpus config file; dataset entries may override recipe fields."""
    path = Path(path)
    try:
        raw = yaml.safe_load(path.read_text("utf-8"))
    except FileNotFoundError:
        raise ConfigError(f"corpus config not found: {path}") from None
    except yaml.YAMLError as exc:
        raise ConfigError(f"corpus config {path} is not valid YAML: {exc}") from None
    if not isinstance(raw, dict):
        raise ConfigError(f"corpus config {path} must be a mapping")
    version = raw.get("config_version")
    if version != CONFIG_VERSION:
        raise ConfigError(f"corpus config {path}: config_version {version!r} != {CONFIG_VERSION}")

    builtin_raw = _builtin_yaml()["datasets"]
    base_dir = path.parent
    specs: dict[str, DatasetSpec] = {}
    raw_locations: dict[str, Path] = {}
    datasets = raw.get("datasets") or {}
    if not datasets:
        raise ConfigError(f"corpus config {path} lists no datasets")
    for dataset_id, entry in datasets.items():
        entry = dict(entry or {})
        if dataset_id not in builtin_raw and "raw_format" not in entry:
            raise ConfigError(f"unknown dataset id {dataset_id!r} (no built-in recipe, no recipe inline)")
        loc = entry.pop("raw_location", None)
        if loc is None:
            raise ConfigError(f"dataset {dataset_id!r}: raw_location is required")
        merged = _merge(builtin_raw.get(dataset_id, {}), entry)
        specs[dataset_id] = _spec_from_dict(dataset_id, merged)
        loc_path = Path(loc)
        raw_locations[dataset_id] = loc_path if loc_path.is_absolute() else base_dir / loc_path

    out = Path(raw.get("out", "corpus.jsonl"))
    out_path = out if out.is_absolute() else base_dir / out
    return CorpusConfig(
        specs=specs,
        raw_locations=raw_locations,
        seed=int(raw.get("seed", 0)),
        out_path=out_path,
        base_dir=base_dir,
        groups=raw.get("group_expected_counts"),
    )
