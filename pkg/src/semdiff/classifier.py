"""Semantic-difference classifier core.

A claim-evidence pair is reduced to the componentwise absolute difference of
its two embeddings (the "diff vector"). Each class is represented by the
arithmetic mean of its training diff vectors, and queries inherit the label
of the nearest representative under Euclidean distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyModel,
    EmptyTrainingSet,
    InvariantViolation,
    NonFiniteInput,
)

Vector = np.ndarray


def as_vector(values: Sequence[float] | np.ndarray, *, what: str = "vector") -> Vector:
    """Coerce to a 1-D float64 array, rejecting NaN/inf and empty input."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise NonFiniteInput(f"{what} must be a non-empty 1-D sequence")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput(f"{what} contains NaN or infinite components")
    return arr


def diff_vector(claim: Sequence[float] | Vector, evidence: Sequence[float] | Vector) -> Vector:
    """Componentwise |evidence - claim|; symmetric in its arguments."""
    c = as_vector(claim, what="claim")
    e = as_vector(evidence, what="evidence")
    if c.shape != e.shape:
        raise DimensionMismatch(f"claim dim {c.size} != evidence dim {e.size}")
    return np.abs(e - c)


def euclidean_distance(a: Sequence[float] | Vector, b: Sequence[float] | Vector) -> float:
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise DimensionMismatch(f"dim {a.size} != dim {b.size}")
    return float(math.sqrt(float(np.sum((a - b) ** 2))))


@dataclass(frozen=True)
class ClassRepresentative:
    """Running mean of one class's diff vectors plus the sample count behind it."""

    label: str
    mean: Vector
    count: int

    def __post_init__(self):
        object.__setattr__(self, "mean", as_vector(self.mean, what=f"mean[{self.label}]"))
        if np.any(self.mean < 0):
            raise NonFiniteInput(f"mean[{self.label}] has negative components")
        if self.count < 1:
            raise InvariantViolation(f"representative {self.label!r} has count {self.count}")
        self.mean.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.mean.size


@dataclass(frozen=True)
class ClassifierModel:
    """Label-sorted representatives sharing one embedding dimension.

    Immutable after construction; predict() is pure, so a model may be shared
    across threads freely.
    """

    dim: int
    representatives: tuple[ClassRepresentative, ...]

    def __post_init__(self):
        object.__setattr__(self, "representatives", tuple(self.representatives))
        if not self.representatives:
            raise EmptyModel("model has no class representatives")
        labels = [r.label for r in self.representatives]
        if len(set(labels)) != len(labels):
            raise InvariantViolation(f"duplicate labels in model: {labels}")
        if labels != sorted(labels):
            raise InvariantViolation("representatives must be sorted by label")
        for r in self.representatives:
            if r.dim != self.dim:
                raise DimensionMismatch(
                    f"representative {r.label!r} has dim {r.dim}, model dim {self.dim}"
                )

    @property
    def labels(self) -> list[str]:
        return [r.label for r in self.representatives]


def fit(samples: Iterable[tuple[str, Sequence[float] | Vector]]) -> ClassifierModel:
    """Average diff vectors per class into representatives.

    Means are accumulated in float64 regardless of input storage precision.
    """
    by_label: dict[str, list[Vector]] = {}
    dim = None
    for label, values in samples:
        vec = as_vector(values, what=f"sample[{label}]")
        if np.any(vec < 0):
            raise NonFiniteInput(f"diff vector for {label!r} has negative components")
        if dim is None:
            dim = vec.size
        elif vec.size != dim:
            raise DimensionMismatch(f"sample dim {vec.size} != expected {dim}")
        by_label.setdefault(label, []).append(vec)
    if not by_label:
        raise EmptyTrainingSet("no training samples")
    reps = tuple(
        ClassRepresentative(
            label=label,
            mean=np.mean(np.stack(by_label[label]), axis=0),
            count=len(by_label[label]),
        )
        for label in sorted(by_label)
    )
    return ClassifierModel(dim=dim, representatives=reps)


def fit_incremental(
    rep: ClassRepresentative, sample: Sequence[float] | Vector
) -> ClassRepresentative:
    """Fold one more sample into a representative via the running-mean update.

    mean' = mean + (sample - mean) / (count + 1), so the mean moves by exactly
    ||sample - mean|| / (count + 1); this shrinking step is what makes the
    representatives plateau as shots accumulate.
    """
    vec = as_vector(sample, what=f"sample[{rep.label}]")
    if vec.size != rep.dim:
        raise DimensionMismatch(f"sample dim {vec.size} != representative dim {rep.dim}")
    count = rep.count + 1
    mean = rep.mean + (vec - rep.mean) / count
    return ClassRepresentative(label=rep.label, mean=mean, count=count)


def predict(
    model: ClassifierModel,
    claim: Sequence[float] | Vector,
    evidence: Sequence[float] | Vector,
) -> tuple[str, dict[str, float]]:
    """Nearest-representative label for one claim-evidence pair.

    Returns the winning label and the distance to every representative.
    Exact distance ties go to the lexicographically smallest label.
    """
    query = diff_vector(claim, evidence)
    if query.size != model.dim:
        raise DimensionMismatch(f"query dim {query.size} != model dim {model.dim}")
    distances = {r.label: euclidean_distance(query, r.mean) for r in model.representatives}
    best = min(distances, key=lambda lab: (distances[lab], lab))
    return best, distances


def predict_batch(model: ClassifierModel, pairs: Iterable) -> list[tuple[str, dict[str, float]]]:
    """predict() applied to each pair, preserving input order.

    Accepts anything with .claim/.evidence attributes or (claim, evidence) tuples.
    """
    out = []
    for pair in pairs:
        if hasattr(pair, "claim"):
            claim, evidence = pair.claim, pair.evidence
        else:
            claim, evidence = pair
        out.append(predict(model, claim, evidence))
    return out
