import numpy as np
import pytest

from semdiff.dataset import EmbeddedDataset, EmbeddedPair


def build_dataset(specs, dim=4, rng=None):
    """specs: {label: count}. Pairs get small random embeddings per class."""
    rng = rng or np.random.default_rng(0)
    pairs = []
    for label, count in sorted(specs.items()):
        for k in range(count):
            claim = rng.uniform(-1, 1, dim)
            evidence = rng.uniform(-1, 1, dim)
            pairs.append(
                EmbeddedPair(id=f"{label}-{k}", label=label, claim=claim, evidence=evidence)
            )
    return EmbeddedDataset(pairs=tuple(pairs))


def separable_dataset(per_class=120, dim=8, spread=0.05, rng=None):
    """3 classes whose diff-vector clusters sit far apart relative to spread.

    Claims are zero vectors so the diff equals the (non-negative) evidence;
    class centers are 100 apart while intra-class diameter is ~2*spread*sqrt(dim).
    """
    rng = rng or np.random.default_rng(7)
    centers = {"Contradict": 100.0, "Neutral": 200.0, "Support": 300.0}
    pairs = []
    for label, center in sorted(centers.items()):
        for k in range(per_class):
            evidence = center + rng.uniform(-spread, spread, dim)
            pairs.append(
                EmbeddedPair(
                    id=f"{label}-{k}", label=label, claim=np.zeros(dim), evidence=evidence
                )
            )
    return EmbeddedDataset(pairs=tuple(pairs))


def null_dataset(per_class=120, dim=8, labels=("A", "B", "C")):
    """Identical embeddings everywhere; labels carry no signal."""
    claim = np.full(dim, 0.5)
    evidence = np.full(dim, 1.5)
    pairs = []
    for label in sorted(labels):
        for k in range(per_class):
            pairs.append(
                EmbeddedPair(id=f"{label}-{k}", label=label, claim=claim, evidence=evidence)
            )
    return EmbeddedDataset(pairs=tuple(pairs))


@pytest.fixture
def three_class_dataset():
    return build_dataset({"A": 10, "B": 10, "C": 10})
