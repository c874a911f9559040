"""Corpus-level validation: counts, duplicate ids, cross-split leakage."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .schema import DatasetSpec
from .store import Corpus

_LEAK_LIST_CAP = 20


@dataclass
class ValidationReport:
    """Findings from one validation pass; errors are corpus defects, warnings are notes."""

    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.errors

    @property
    def clean(self) -> bool:
        return not self.errors and not self.warnings

    def lines(self) -> list[str]:
        out = [f"datasets: {len(self.counts)}, samples: {sum(c['total'] for c in self.counts.values())}"]
        out += [f"ERROR: {e}" for e in self.errors]
        out += [f"WARN: {w}" for w in self.warnings]
        return out


def validate_corpus(
    corpus: Corpus,
    specs: dict[str, DatasetSpec] | None = None,
    group_expectations: dict | None = None,
) -> ValidationReport:
    """Check the unified corpus; the report carries findings instead of raising."""
    report = ValidationReport(counts=corpus.counts())

    id_counts = Counter(s.id for s in corpus.samples)
    dupes = sorted(i for i, n in id_counts.items() if n > 1)
    if dupes:
        shown = ", ".join(dupes[:_LEAK_LIST_CAP])
        report.errors.append(f"duplicate ids ({len(dupes)}): {shown}")

    if specs:
        for did, spec in sorted(specs.items()):
            actual = report.counts.get(did, {"total": 0, "deceptive": 0, "non_deceptive": 0})
            exp = spec.expected
            for name, expected in (
                ("total", exp.total),
                ("deceptive", exp.deceptive),
                ("non_deceptive", exp.non_deceptive),
            ):
                if expected is not None and actual.get(name, 0) != expected:
                    report.warnings.append(
                        f"{did}: {name} count {actual.get(name, 0)} != expected {expected}"
                    )
            if exp.splits:
                splits = actual.get("splits", {})
                for split, expected in exp.splits.items():
                    if splits.get(split, 0) != expected:
                        report.warnings.append(
                            f"{did}: {split} count {splits.get(split, 0)} != expected {expected}"
                        )

    if group_expectations:
        for group, entry in sorted(group_expectations.items()):
            members = entry.get("datasets", [])
            expected = entry.get("total")
            if expected is None or not all(m in report.counts for m in members):
                continue
            actual = sum(report.counts[m]["total"] for m in members)
            if actual != expected:
                report.warnings.append(
                    f"group {group} ({'+'.join(members)}): total {actual} != expected {expected}"
                )

    # Same normalized text in a train and a test slot leaks label information.
    by_text: dict[str, dict[str, list[str]]] = defaultdict(lambda: defaultdict(list))
    for s in corpus.samples:
        by_text[s.text][s.split].append(s.id)
    leaks = []
    for text, splits in by_text.items():
        if "train" in splits and "test" in splits:
            leaks.append((splits["train"], splits["test"]))
    if leaks:
        shown = "; ".join(
            f"train={'/'.join(tr[:2])} test={'/'.join(te[:2])}" for tr, te in leaks[:_LEAK_LIST_CAP]
        )
        report.warnings.append(
            f"cross-split leakage: {len(leaks)} texts appear in both train and test: {shown}"
        )
    return report
