"""Unified corpus container and its newline-delimited persistence."""

from __future__ import annotations

import dataclasses
import hashlib
import json
from collections import defaultdict
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from ..errors import CorpusFormatError
from .schema import TextSample

FORMAT_NAME = "deceptkit-corpus"
FORMAT_VERSION = 1

_SAMPLE_FIELDS = ("id", "text", "label", "dataset_id", "original_label", "split", "event_tag")


@dataclasses.dataclass(frozen=True)
class Corpus:
    """Immutable collection of unified samples plus build metadata."""

    samples: tuple[TextSample, ...]
    metadata: Mapping[str, Any] = dataclasses.field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.samples)

    def by_dataset(self) -> dict[str, list[TextSample]]:
        out: dict[str, list[TextSample]] = defaultdict(list)
        for s in self.samples:
            out[s.dataset_id].append(s)
        return dict(out)

    def by_split(self) -> dict[str, list[TextSample]]:
        out: dict[str, list[TextSample]] = defaultdict(list)
        for s in self.samples:
            out[s.split].append(s)
        return dict(out)

    def counts(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for did, samples in sorted(self.by_dataset().items()):
            entry = {"total": len(samples), "deceptive": 0, "non_deceptive": 0}
            splits: dict[str, int] = defaultdict(int)
            for s in samples:
                entry[s.label] += 1
                splits[s.split] += 1
            entry["splits"] = dict(sorted(splits.items()))  # type: ignore[assignment]
            out[did] = entry
        return out

    def fingerprint(self) -> str:
        """Stable content hash over (id, label, text) triples."""
        h = hashlib.sha256()
        for s in sorted(self.samples, key=lambda x: x.id):
            h.update(s.id.encode("utf-8"))
            h.update(b"\x00")
            h.update(s.label.encode("utf-8"))
            h.update(b"\x00")
            h.update(s.text.encode("utf-8"))
            h.update(b"\x01")
        return h.hexdigest()[:16]

    def replace_samples(self, samples: Iterable[TextSample]) -> "Corpus":
        return Corpus(samples=tuple(samples), metadata=self.metadata)


def _sample_record(s: TextSample) -> dict:
    return {f: getattr(s, f) for f in _SAMPLE_FIELDS}


def export_corpus(corpus: Corpus, path: str | Path) -> Path:
    """Write the corpus as one JSON record per line plus a sidecar manifest.

    Records are sorted by id and serialized with sorted keys, so two exports
    of the same corpus are byte-identical.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    header = {"format": FORMAT_NAME, "version": FORMAT_VERSION}
    lines = [json.dumps(header, sort_keys=True, ensure_ascii=False)]
    for s in sorted(corpus.samples, key=lambda x: x.id):
        lines.append(json.dumps(_sample_record(s), sort_keys=True, ensure_ascii=False))
    body = "\n".join(lines) + "\n"
    path.write_text(body, encoding="utf-8")

    manifest = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "n_samples": len(corpus),
        "counts": corpus.counts(),
        "fingerprint": corpus.fingerprint(),
        "corpus_sha256": hashlib.sha256(body.encode("utf-8")).hexdigest(),
        "metadata": dict(corpus.metadata),
    }
    manifest_path(path).write_text(
        json.dumps(manifest, sort_keys=True, ensure_ascii=False, indent=2) + "\n",
        encoding="utf-8",
    )
    return path


def manifest_path(corpus_path: str | Path) -> Path:
    corpus_path = Path(corpus_path)
    return corpus_path.with_name(corpus_path.stem + ".manifest.json")


def load_corpus(path: str | Path) -> Corpus:
    """Load a persisted corpus; refuses truncated files and version mismatches."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CorpusFormatError(f"cannot read corpus {path}: {exc}") from None
    lines = text.splitlines()
    if not lines:
        raise CorpusFormatError(f"{path}: empty file, not a corpus")
    if not text.endswith("\n"):
        raise CorpusFormatError(f"{path}: truncated file (no trailing newline)")
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise CorpusFormatError(f"{path}:1: bad header line ({exc})") from None
    if not isinstance(header, dict) or header.get("format") != FORMAT_NAME:
        raise CorpusFormatError(f"{path}: not a {FORMAT_NAME} file")
    if header.get("version") != FORMAT_VERSION:
        raise CorpusFormatError(
            f"{path}: corpus version {header.get('version')!r} != supported {FORMAT_VERSION}"
        )
    samples = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            samples.append(TextSample(**{f: rec[f] for f in _SAMPLE_FIELDS}))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise CorpusFormatError(f"{path}:{lineno}: bad record ({exc})") from None

    metadata: dict[str, Any] = {}
    mpath = manifest_path(path)
    if mpath.exists():
        try:
            manifest = json.loads(mpath.read_text(encoding="utf-8"))
            metadata = manifest.get("metadata", {})
        except json.JSONDecodeError as exc:
            raise CorpusFormatError(f"{mpath}: bad manifest ({exc})") from None
    return Corpus(samples=tuple(samples), metadata=metadata)


def build_corpus(sample_groups: Sequence[Iterable[TextSample]], metadata: Mapping[str, Any]) -> Corpus:
    """Assemble one corpus from per-dataset sample lists (single-writer step)."""
    samples: list[TextSample] = []
    for group in sample_groups:
        samples.extend(group)
    return Corpus(samples=tuple(samples), metadata=dict(metadata))
