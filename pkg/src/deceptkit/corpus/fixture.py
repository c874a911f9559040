"""Synthetic mini-corpus generator.

Writes small raw files in each dataset's native on-disk format plus a corpus
config whose expected counts match what was generated, so the full ingestion
path can run offline in seconds. Texts are built from cue vocabularies that
make the two classes separable; the covid-tagged datasets use their own cue
vocabulary, disjoint from the general one, so that models trained without
in-domain data face a genuine cold start on the covid test set.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import yaml

FILLER = (
    "the a to of and we you for on in with at from about today team plan note "
    "story public local people city time new update morning office street open"
).split()

GENERAL_DECEPTIVE_CUES = (
    "winner prize lottery jackpot claim urgent wire transfer guaranteed "
    "exclusive shocking secret funds bonus click"
).split()
GENERAL_GENUINE_CUES = (
    "meeting schedule budget agenda review lunch project minutes weather "
    "thanks invoice deadline draft notes summary"
).split()

COVID_TOPIC = "virus covid pandemic outbreak health".split()
COVID_DECEPTIVE_CUES = (
    "miracle garlic remedy bleach microchip shadow lab plot cover hidden"
).split()
COVID_GENUINE_CUES = (
    "briefing dashboard guidance trial cases symptoms distancing masks variants clinic"
).split()

DEFAULT_SIZES = {did: 50 for did in (
    "pheme", "liar", "fnn_gossipcop", "fnn_politifact", "rashkin_politifact",
    "rashkin_newsfiles", "covid_zenodo", "covid_aaai", "enron", "sms",
)}

# Fraction of deceptive samples per dataset; zenodo mirrors its heavy skew.
DECEPTIVE_RATIO = {
    "pheme": 0.4, "liar": 0.5, "fnn_gossipcop": 0.35, "fnn_politifact": 0.45,
    "rashkin_politifact": 0.5, "rashkin_newsfiles": 0.6, "covid_zenodo": 0.9,
    "covid_aaai": 0.48, "enron": 0.5, "sms": 0.3,
}

LIAR_GENUINE = ("true", "mostly-true", "half-true")
LIAR_DECEPTIVE = ("barely-true", "false", "pants-fire")
RASHKIN_PF_GENUINE = ("true", "mostly-true", "half-true")
RASHKIN_PF_DECEPTIVE = ("mostly-false", "false", "pants-on-fire")

PHEME_EVENTS = ("sydneysiege", "ottawashooting")


@dataclass
class FixtureWorkspace:
    root: Path
    raw_root: Path
    config_path: Path
    counts: dict


def _sentence(rng: np.random.Generator, cues, n_cues=3, topic=(), n_filler=(6, 12), shout=False) -> str:
    words = list(rng.choice(FILLER, size=int(rng.integers(*n_filler))))
    words += list(rng.choice(cues, size=min(n_cues, len(cues)), replace=False))
    if topic:
        words += list(rng.choice(topic, size=1))
    rng.shuffle(words)
    text = " ".join(words)
    return text + (" !!!" if shout else ".")


def make_text(rng: np.random.Generator, deceptive: bool, covid: bool) -> str:
    if covid:
        cues = COVID_DECEPTIVE_CUES if deceptive else COVID_GENUINE_CUES
        return _sentence(rng, cues, topic=COVID_TOPIC)
    cues = GENERAL_DECEPTIVE_CUES if deceptive else GENERAL_GENUINE_CUES
    return _sentence(rng, cues, shout=deceptive and rng.random() < 0.7)


def _labels(rng: np.random.Generator, n: int, ratio: float) -> list[bool]:
    n_dec = max(1, round(n * ratio))
    n_dec = min(n_dec, n - 1)  # keep both classes present
    flags = [True] * n_dec + [False] * (n - n_dec)
    rng.shuffle(flags)
    return flags


def _split_sizes(n: int) -> tuple[int, int, int]:
    n_test = int(n * 0.2)
    n_val = int(n * 0.2)
    return n - n_val - n_test, n_val, n_test


def write_fixture_raw(raw_root: Path, sizes: dict[str, int], seed: int = 7) -> dict:
    """Write synthetic raw files for all ten datasets; returns per-dataset counts."""
    rng = np.random.default_rng(seed)
    raw_root = Path(raw_root)
    counts: dict[str, dict] = {}

    def tally(did, flags, splits=None):
        entry = {
            "total": len(flags),
            "deceptive": sum(flags),
            "non_deceptive": len(flags) - sum(flags),
        }
        if splits:
            entry["splits"] = splits
        counts[did] = entry

    # sms: single tab-separated file, label first
    did = "sms"
    d = raw_root / did
    d.mkdir(parents=True, exist_ok=True)
    flags = _labels(rng, sizes[did], DECEPTIVE_RATIO[did])
    with (d / "SMSSpamCollection").open("w", encoding="utf-8", newline="") as f:
        for dec in flags:
            f.write(("spam" if dec else "ham") + "\t" + make_text(rng, dec, covid=False) + "\n")
    tally(did, flags)

    # enron: directory-of-files with spam/ and ham/ subdirs
    did = "enron"
    d = raw_root / did / "enron1"
    flags = _labels(rng, sizes[did], DECEPTIVE_RATIO[did])
    for i, dec in enumerate(flags):
        sub = d / ("spam" if dec else "ham")
        sub.mkdir(parents=True, exist_ok=True)
        body = f"Subject: {make_text(rng, dec, covid=False)}\n\n{make_text(rng, dec, covid=False)}\n"
        (sub / f"{i:04d}.txt").write_text(body, encoding="utf-8")
    tally(did, flags)

    # liar: three provided-split TSVs, columns id/label/statement/speaker
    did = "liar"
    d = raw_root / did
    d.mkdir(parents=True, exist_ok=True)
    flags = _labels(rng, sizes[did], DECEPTIVE_RATIO[did])
    n_train, n_val, n_test = _split_sizes(len(flags))
    offsets = {"train.tsv": (0, n_train), "valid.tsv": (n_train, n_train + n_val),
               "test.tsv": (n_train + n_val, len(flags))}
    for fname, (lo, hi) in offsets.items():
        with (d / fname).open("w", encoding="utf-8", newline="") as f:
            for i in range(lo, hi):
                dec = flags[i]
                orig = str(rng.choice(LIAR_DECEPTIVE if dec else LIAR_GENUINE))
                row = [f"{i}.json", orig, make_text(rng, dec, covid=False), "speaker-x"]
                f.write("\t".join(row) + "\n")
    tally(did, flags, {"train": n_train, "val": n_val, "test": n_test})

    # rashkin_politifact: same shape as liar with its own rating names
    did = "rashkin_politifact"
    d = raw_root / did
    d.mkdir(parents=True, exist_ok=True)
    flags = _labels(rng, sizes[did], DECEPTIVE_RATIO[did])
    n_train, n_val, n_test = _split_sizes(len(flags))
    offsets = {"train.tsv": (0, n_train), "dev.tsv": (n_train, n_train + n_val),
               "test.tsv": (n_train + n_val, len(flags))}
    for fname, (lo, hi) in offsets.items():
        with (d / fname).open("w", encoding="utf-8", newline="") as f:
            for i in range(lo, hi):
                dec = flags[i]
                orig = str(rng.choice(RASHKIN_PF_DECEPTIVE if dec else RASHKIN_PF_GENUINE))
                f.write(orig + "\t" + make_text(rng, dec, covid=False) + "\n")
    tally(did, flags, {"train": n_train, "val": n_val, "test": n_test})

    # rashkin_newsfiles: numeric labels, plus drop-rule rows (code 4)
    did = "rashkin_newsfiles"
    d = raw_root / did
    d.mkdir(parents=True, exist_ok=True)
    flags = _labels(rng, sizes[did], DECEPTIVE_RATIO[did])
    with (d / "newsfiles.tsv").open("w", encoding="utf-8", newline="") as f:
        for dec in flags:
            code = str(rng.choice(["2", "3"])) if dec else "1"
            f.write(code + "\t" + make_text(rng, dec, covid=False) + "\n")
        for _ in range(5):  # trusted rows are dropped by the label map
            f.write("4\t" + make_text(rng, False, covid=False) + "\n")
    tally(did, flags)

    # fnn pair CSVs: label constant per file, extra url/tweet columns
    for did in ("fnn_gossipcop", "fnn_politifact"):
        d = raw_root / did
        d.mkdir(parents=True, exist_ok=True)
        flags = _labels(rng, sizes[did], DECEPTIVE_RATIO[did])
        stem = did.split("_", 1)[1]
        for label_name, dec_value in (("fake", True), ("real", False)):
            rows = [i for i, dec in enumerate(flags) if dec == dec_value]
            with (d / f"{stem}_{label_name}.csv").open("w", encoding="utf-8", newline="") as f:
                w = csv.writer(f)
                w.writerow(["id", "news_url", "title", "tweet_ids"])
                for i in rows:
                    w.writerow([f"{stem}-{i}", "example.org/a", make_text(rng, dec_value, covid=False), ""])
        tally(did, flags)

    # covid_aaai: three provided-split CSVs with covid-domain texts
    did = "covid_aaai"
    d = raw_root / did
    d.mkdir(parents=True, exist_ok=True)
    flags = _labels(rng, sizes[did], DECEPTIVE_RATIO[did])
    n_train, n_val, n_test = _split_sizes(len(flags))
    offsets = {"Constraint_Train.csv": (0, n_train), "Constraint_Val.csv": (n_train, n_train + n_val),
               "Constraint_Test.csv": (n_train + n_val, len(flags))}
    for fname, (lo, hi) in offsets.items():
        with (d / fname).open("w", encoding="utf-8", newline="") as f:
            w = csv.writer(f)
            w.writerow(["id", "tweet", "label"])
            for i in range(lo, hi):
                dec = flags[i]
                w.writerow([i, make_text(rng, dec, covid=True), "fake" if dec else "real"])
    tally(did, flags, {"train": n_train, "val": n_val, "test": n_test})

    # covid_zenodo: single CSV, heavy deceptive skew, outcome 0=fake 1=real
    did = "covid_zenodo"
    d = raw_root / did
    d.mkdir(parents=True, exist_ok=True)
    flags = _labels(rng, sizes[did], DECEPTIVE_RATIO[did])
    with (d / "covid_fake_news.csv").open("w", encoding="utf-8", newline="") as f:
        w = csv.writer(f)
        w.writerow(["headlines", "outcome"])
        for dec in flags:
            w.writerow([make_text(rng, dec, covid=True), 0 if dec else 1])
    tally(did, flags)

    # pheme: per-event tweet trees with rumours/non-rumours classes
    did = "pheme"
    d = raw_root / did
    flags = _labels(rng, sizes[did], DECEPTIVE_RATIO[did])
    for i, dec in enumerate(flags):
        event = PHEME_EVENTS[i % len(PHEME_EVENTS)]
        cls = "rumours" if dec else "non-rumours"
        thread = d / event / cls / f"{500000 + i}" / "source-tweets"
        thread.mkdir(parents=True, exist_ok=True)
        record = {"id": 500000 + i, "text": make_text(rng, dec, covid=False), "user": {"id": i}}
        (thread / f"{500000 + i}.json").write_text(json.dumps(record), encoding="utf-8")
    tally(did, flags)

    return counts


def write_fixture_workspace(root: str | Path, sizes: dict[str, int] | None = None,
                            seed: int = 7) -> FixtureWorkspace:
    """Generate raw files and a ready-to-ingest corpus config under root."""
    root = Path(root)
    raw_root = root / "raw"
    sizes = {**DEFAULT_SIZES, **(sizes or {})}
    counts = write_fixture_raw(raw_root, sizes, seed=seed)

    config = {
        "config_version": 1,
        "seed": seed,
        "out": "corpus.jsonl",
        "datasets": {
            did: {
                "raw_location": str(Path("raw") / did),
                "expected_counts": entry,
            }
            for did, entry in counts.items()
        },
        "group_expected_counts": {
            "fakenewsnet": {
                "datasets": ["fnn_gossipcop", "fnn_politifact"],
                "total": counts["fnn_gossipcop"]["total"] + counts["fnn_politifact"]["total"],
            }
        },
    }
    config_path = root / "corpus_config.yaml"
    config_path.write_text(yaml.safe_dump(config, sort_keys=True), encoding="utf-8")
    return FixtureWorkspace(root=root, raw_root=raw_root, config_path=config_path, counts=counts)
