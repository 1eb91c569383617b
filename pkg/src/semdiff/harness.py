"""n-shot experiment sweep, convergence curves, and CSV report emission.

The whole harness is deterministic: given the same dataset bytes and config,
two runs write byte-identical CSVs. Sampling is driven by the pinned PCG32
generator, classes always processed in sorted label order.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

from . import classifier, metrics
from .dataset import EmbeddedDataset
from .errors import InsufficientClassSize
from .rng import PCG32, partial_shuffle

DEFAULT_SHOT_COUNTS = (2, 4, 6, 8, 10, 20, 30, 40, 50, 100)
DEFAULT_SEEDS = tuple(range(123, 133))


@dataclass(frozen=True)
class ExperimentConfig:
    shot_counts: tuple[int, ...] = DEFAULT_SHOT_COUNTS
    seeds: tuple[int, ...] = DEFAULT_SEEDS
    dataset_name: str = "dataset"
    setting: str = "default"

    def __post_init__(self):
        object.__setattr__(self, "shot_counts", tuple(self.shot_counts))
        object.__setattr__(self, "seeds", tuple(self.seeds))
        if not self.shot_counts or list(self.shot_counts) != sorted(set(self.shot_counts)):
            raise ValueError(f"shot counts must be ascending and unique: {self.shot_counts}")
        if any(n < 1 for n in self.shot_counts):
            raise ValueError("shot counts must be positive")
        if not self.seeds:
            raise ValueError("at least one seed required")
        if any(s < 0 for s in self.seeds):
            raise ValueError("seeds must be unsigned")


@dataclass(frozen=True)
class ConvergencePoint:
    n: int
    per_class: dict[str, float]
    mean_distance: float = field(default=-1.0)

    def __post_init__(self):
        if self.mean_distance < 0:
            object.__setattr__(
                self, "mean_distance", sum(self.per_class.values()) / len(self.per_class)
            )


def sample_shots(
    dataset: EmbeddedDataset, n: int, seed: int
) -> tuple[EmbeddedDataset, EmbeddedDataset]:
    """Draw n training pairs per class; everything else becomes the test set.

    One PCG32 stream seeded once serves all classes, visited in sorted label
    order, each selecting its train slots by partial Fisher-Yates over the
    class's pairs in dataset order.
    """
    if n < 1:
        raise InsufficientClassSize("shot count must be positive")
    rng = PCG32(seed)
    groups = dataset.by_label()
    train_ids: set[str] = set()
    train_pairs = []
    for label in dataset.labels:
        members = groups[label]
        if len(members) <= n:
            raise InsufficientClassSize(
                f"class {label!r} has {len(members)} pairs, need more than {n}"
            )
        for i in partial_shuffle(len(members), n, rng):
            train_pairs.append(members[i])
            train_ids.add(members[i].id)
    test_pairs = [p for p in dataset.pairs if p.id not in train_ids]
    train = EmbeddedDataset(pairs=tuple(train_pairs), labels=dataset.labels, dim=dataset.dim)
    test = EmbeddedDataset(pairs=tuple(test_pairs), labels=dataset.labels, dim=dataset.dim)
    return train, test


def run_single(dataset: EmbeddedDataset, n: int, seed: int) -> metrics.RunMetrics:
    """One cell of the sweep: sample, fit on train diffs, score the test set."""
    train, test = sample_shots(dataset, n, seed)
    model = classifier.fit((p.label, p.diff()) for p in train.pairs)
    preds = [label for label, _ in classifier.predict_batch(model, test.pairs)]
    golds = [p.label for p in test.pairs]
    cm = metrics.confusion(golds, preds, dataset.labels)
    return metrics.run_metrics(cm)


def run_nshot_experiment(
    config: ExperimentConfig, dataset: EmbeddedDataset
) -> dict[int, metrics.AggregateMetrics]:
    results = {}
    for n in config.shot_counts:
        runs = [run_single(dataset, n, seed) for seed in config.seeds]
        results[n] = metrics.aggregate(runs)
    return results


def convergence_curve(
    dataset: EmbeddedDataset, max_n: int, seed: int
) -> list[ConvergencePoint]:
    """Distance each additional shot moves every class representative.

    Each class gets one seed-shuffled sample order; the representative at n
    shots extends the one at n-1 incrementally, so the reported distance is
    exactly ||sample_n - mean_{n-1}|| / n.
    """
    if max_n < 2:
        raise InsufficientClassSize("max_n must be at least 2")
    rng = PCG32(seed)
    groups = dataset.by_label()
    orders = {}
    for label in dataset.labels:
        members = groups[label]
        if len(members) < max_n:
            raise InsufficientClassSize(
                f"class {label!r} has {len(members)} pairs, need at least {max_n}"
            )
        orders[label] = [members[i] for i in partial_shuffle(len(members), max_n, rng)]
    reps = {
        label: classifier.ClassRepresentative(label=label, mean=orders[label][0].diff(), count=1)
        for label in dataset.labels
    }
    curve = []
    for n in range(2, max_n + 1):
        per_class = {}
        for label in dataset.labels:
            nxt = classifier.fit_incremental(reps[label], orders[label][n - 1].diff())
            per_class[label] = classifier.euclidean_distance(nxt.mean, reps[label].mean)
            reps[label] = nxt
        curve.append(ConvergencePoint(n=n, per_class=per_class))
    return curve


def emit_report(
    results: dict[int, metrics.AggregateMetrics],
    path,
    *,
    dataset_name: str = "dataset",
    setting: str = "default",
) -> None:
    """Write the sweep as CSV: one accuracy row plus one f1 row per class per n."""
    if not results:
        raise ValueError("no results to write")
    rows = []
    for n in sorted(results):
        agg = results[n]
        rows.append((n, "accuracy", "", agg.mean.accuracy, agg.std.accuracy))
        for label in sorted(agg.mean.f1_per_class):
            rows.append((n, "f1", label, agg.mean.f1_per_class[label], agg.std.f1_per_class[label]))
    rows.sort(key=lambda r: (r[0], r[1], r[2]))
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["dataset", "setting", "n_shots", "metric", "class", "mean", "std"])
        for n, metric, label, mean, std in rows:
            writer.writerow([dataset_name, setting, n, metric, label, f"{mean:.6f}", f"{std:.6f}"])


def emit_convergence(curve: list[ConvergencePoint], path) -> None:
    if not curve:
        raise ValueError("no convergence points to write")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "class", "distance"])
        for point in curve:
            for label in sorted(point.per_class):
                writer.writerow([point.n, label, f"{point.per_class[label]:.6f}"])
            writer.writerow([point.n, "__mean__", f"{point.mean_distance:.6f}"])
