"""In-memory claim-evidence dataset with validated embeddings."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .classifier import Vector, as_vector, diff_vector
from .errors import DimensionMismatch, DuplicateId, UnknownLabel


@dataclass(frozen=True)
class EmbeddedPair:
    id: str
    label: str
    claim: Vector
    evidence: Vector

    def __post_init__(self):
        object.__setattr__(self, "claim", as_vector(self.claim, what=f"claim[{self.id}]"))
        object.__setattr__(self, "evidence", as_vector(self.evidence, what=f"evidence[{self.id}]"))
        if self.claim.size != self.evidence.size:
            raise DimensionMismatch(
                f"pair {self.id!r}: claim dim {self.claim.size} != evidence dim {self.evidence.size}"
            )
        self.claim.setflags(write=False)
        self.evidence.setflags(write=False)

    def diff(self) -> Vector:
        return diff_vector(self.claim, self.evidence)


@dataclass(frozen=True)
class EmbeddedDataset:
    pairs: tuple[EmbeddedPair, ...]
    labels: tuple[str, ...] = field(default=())
    dim: int = 0

    def __post_init__(self):
        pairs = tuple(self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise UnknownLabel("dataset has no pairs")
        labels = self.labels or tuple(sorted({p.label for p in pairs}))
        labels = tuple(labels)
        if list(labels) != sorted(set(labels)):
            raise UnknownLabel(f"label list must be sorted and unique: {labels}")
        object.__setattr__(self, "labels", labels)
        dim = self.dim or pairs[0].claim.size
        object.__setattr__(self, "dim", dim)
        seen: set[str] = set()
        for p in pairs:
            if p.claim.size != dim:
                raise DimensionMismatch(f"pair {p.id!r} has dim {p.claim.size}, expected {dim}")
            if p.label not in labels:
                raise UnknownLabel(f"pair {p.id!r} has label {p.label!r} not in {labels}")
            if p.id in seen:
                raise DuplicateId(f"duplicate pair id {p.id!r}")
            seen.add(p.id)

    def __len__(self) -> int:
        return len(self.pairs)

    def by_label(self) -> dict[str, list[EmbeddedPair]]:
        """Pairs grouped by label, dataset order preserved within each group."""
        groups: dict[str, list[EmbeddedPair]] = {lab: [] for lab in self.labels}
        for p in self.pairs:
            groups[p.label].append(p)
        return groups


def make_pair(id: str, label: str, claim: Sequence[float], evidence: Sequence[float]) -> EmbeddedPair:
    return EmbeddedPair(id=id, label=label, claim=np.asarray(claim), evidence=np.asarray(evidence))
