"""Split assignment policies."""

from __future__ import annotations

from collections import defaultdict
from typing import Sequence

import numpy as np

from ..errors import SplitError
from .schema import SplitAssignment, TextSample

RANDOM_60_20_20 = "random_60_20_20"
PROVIDED = "provided"


def make_splits(samples: Sequence[TextSample], policy: str, seed: int = 0) -> SplitAssignment:
    """Assign train/val/test to every sample id under the given policy.

    random_60_20_20 is stratified by label: per class, floor(0.2 n) samples go
    to test and to val, the remainder to train. Deterministic for a fixed seed.
    provided simply echoes the split annotations already on the samples.
    """
    if policy == PROVIDED:
        mapping = {}
        seen_splits = set()
        for s in samples:
            mapping[s.id] = s.split
            seen_splits.add(s.split)
        if samples and "test" not in seen_splits:
            raise SplitError(
                "provided policy requires split annotations in the raw data; no test split found"
            )
        return SplitAssignment(mapping=mapping, seed=seed, policy=PROVIDED)

    if policy != RANDOM_60_20_20:
        raise SplitError(f"unknown split policy {policy!r}")

    by_label: dict[str, list[str]] = defaultdict(list)
    for s in samples:
        by_label[s.label].append(s.id)

    rng = np.random.default_rng(seed)
    mapping: dict[str, str] = {}
    for label in sorted(by_label):
        ids = sorted(by_label[label])
        rng.shuffle(ids)
        n = len(ids)
        n_test = int(n * 0.2)
        n_val = int(n * 0.2)
        for sid in ids[:n_test]:
            mapping[sid] = "test"
        for sid in ids[n_test:n_test + n_val]:
            mapping[sid] = "val"
        for sid in ids[n_test + n_val:]:
            mapping[sid] = "train"
    return SplitAssignment(mapping=mapping, seed=seed, policy=RANDOM_60_20_20)
