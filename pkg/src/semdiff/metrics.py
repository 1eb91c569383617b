"""Confusion-matrix metrics and cross-run aggregation.

All operations are pure; accuracy and classwise F1 feed the per-run report,
and aggregate() collapses the repeated-seed runs into mean / sample std.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import EmptyMatrix, EmptyRuns, LabelSetMismatch, LengthMismatch, UnknownLabel


@dataclass(frozen=True)
class ConfusionMatrix:
    labels: tuple[str, ...]
    counts: np.ndarray  # counts[i][j] = gold label i predicted as label j

    @property
    def total(self) -> int:
        return int(self.counts.sum())


@dataclass(frozen=True)
class RunMetrics:
    accuracy: float
    f1_per_class: dict[str, float]


@dataclass(frozen=True)
class AggregateMetrics:
    mean: RunMetrics
    std: RunMetrics
    n_runs: int


def confusion(
    golds: Sequence[str], preds: Sequence[str], labels: Sequence[str]
) -> ConfusionMatrix:
    if len(golds) != len(preds):
        raise LengthMismatch(f"{len(golds)} golds vs {len(preds)} preds")
    if not golds:
        raise LengthMismatch("no items to score")
    labels = tuple(labels)
    index = {lab: i for i, lab in enumerate(labels)}
    counts = np.zeros((len(labels), len(labels)), dtype=np.int64)
    for gold, pred in zip(golds, preds):
        if gold not in index:
            raise UnknownLabel(f"gold label {gold!r} not in {labels}")
        if pred not in index:
            raise UnknownLabel(f"predicted label {pred!r} not in {labels}")
        counts[index[gold], index[pred]] += 1
    counts.setflags(write=False)
    return ConfusionMatrix(labels=labels, counts=counts)


def accuracy(cm: ConfusionMatrix) -> float:
    if cm.total == 0:
        raise EmptyMatrix("confusion matrix has no counts")
    return float(np.trace(cm.counts)) / cm.total


def classwise_f1(cm: ConfusionMatrix) -> dict[str, float]:
    """Per-class F1 = 2PR/(P+R), with F1 = 0 whenever a denominator is zero."""
    if cm.total == 0:
        raise EmptyMatrix("confusion matrix has no counts")
    out = {}
    for i, label in enumerate(cm.labels):
        tp = float(cm.counts[i, i])
        col = float(cm.counts[:, i].sum())
        row = float(cm.counts[i, :].sum())
        precision = tp / col if col > 0 else 0.0
        recall = tp / row if row > 0 else 0.0
        if precision + recall == 0.0:
            out[label] = 0.0
        else:
            out[label] = 2.0 * precision * recall / (precision + recall)
    return out


def run_metrics(cm: ConfusionMatrix) -> RunMetrics:
    return RunMetrics(accuracy=accuracy(cm), f1_per_class=classwise_f1(cm))


def _mean_std(values: list[float]) -> tuple[float, float]:
    n = len(values)
    mean = sum(values) / n
    if n < 2:
        return mean, 0.0
    var = sum((v - mean) ** 2 for v in values) / (n - 1)
    return mean, math.sqrt(var)


def aggregate(runs: Sequence[RunMetrics]) -> AggregateMetrics:
    """Componentwise mean and sample (n-1) standard deviation across runs."""
    if not runs:
        raise EmptyRuns("no runs to aggregate")
    label_set = set(runs[0].f1_per_class)
    for r in runs[1:]:
        if set(r.f1_per_class) != label_set:
            raise LabelSetMismatch(
                f"run label sets differ: {sorted(label_set)} vs {sorted(r.f1_per_class)}"
            )
    acc_mean, acc_std = _mean_std([r.accuracy for r in runs])
    f1_mean, f1_std = {}, {}
    for label in sorted(label_set):
        m, s = _mean_std([r.f1_per_class[label] for r in runs])
        f1_mean[label] = m
        f1_std[label] = s
    return AggregateMetrics(
        mean=RunMetrics(accuracy=acc_mean, f1_per_class=f1_mean),
        std=RunMetrics(accuracy=acc_std, f1_per_class=f1_std),
        n_runs=len(runs),
    )
