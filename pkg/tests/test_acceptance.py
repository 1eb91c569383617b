"""Acceptance suite: one test per release criterion, printed pass/fail.

Everything runs on synthetic embeddings; no network, no encoders. The whole
module is budgeted to finish well under 30 seconds.
"""

import contextlib
import csv
import math

import numpy as np
import pytest

from conftest import null_dataset, separable_dataset
from semdiff import classifier
from semdiff.classifier import ClassifierModel, ClassRepresentative, fit, fit_incremental, predict
from semdiff.cli import main
from semdiff.dataio import save_embedded_dataset
from semdiff.harness import (
    DEFAULT_SEEDS,
    DEFAULT_SHOT_COUNTS,
    ExperimentConfig,
    convergence_curve,
    run_nshot_experiment,
)
from semdiff.metrics import accuracy, aggregate, classwise_f1, confusion
from semdiff.rng import PCG32, partial_shuffle

TOL = 1e-9


@contextlib.contextmanager
def criterion(num, description):
    try:
        yield
    except Exception:
        print(f"[FAIL] criterion {num}: {description}")
        raise
    print(f"[PASS] criterion {num}: {description}")


def test_criterion_1_fit_oracle_equivalence():
    """Batch fit == naive summation oracle == incremental chain, 1e-9."""
    with criterion(1, "batch fit vs summation oracle vs incremental chain (200 datasets)"):
        rng = np.random.default_rng(2024)
        for _ in range(200):
            dim = int(rng.integers(1, 65))
            n_classes = int(rng.integers(1, 5))
            total = int(rng.integers(n_classes, 1001))
            labels = [f"c{i}" for i in range(n_classes)]
            samples = [
                (labels[i % n_classes], rng.uniform(0, 100, dim))
                for i in range(total)
            ]
            model = fit(samples)

            # naive summation oracle, plain Python floats
            sums = {lab: [0.0] * dim for lab in labels}
            counts = {lab: 0 for lab in labels}
            for lab, vec in samples:
                counts[lab] += 1
                for k in range(dim):
                    sums[lab][k] += float(vec[k])
            for rep in model.representatives:
                oracle = [s / counts[rep.label] for s in sums[rep.label]]
                assert rep.count == counts[rep.label]
                assert np.max(np.abs(rep.mean - np.array(oracle))) <= TOL

            # incremental chain oracle
            chains = {}
            for lab, vec in samples:
                if lab not in chains:
                    chains[lab] = ClassRepresentative(label=lab, mean=vec, count=1)
                else:
                    chains[lab] = fit_incremental(chains[lab], vec)
            for rep in model.representatives:
                assert np.max(np.abs(rep.mean - chains[rep.label].mean)) <= TOL
                assert rep.count == chains[rep.label].count


def test_criterion_2_argmin_oracle():
    """predict == exhaustive-min oracle on 10,000 queries, incl. exact ties."""
    with criterion(2, "argmin oracle agreement on 10,000 queries + tie rule"):
        rng = np.random.default_rng(77)
        dim = 8
        reps = tuple(
            ClassRepresentative(label=lab, mean=rng.uniform(0, 5, dim), count=1)
            for lab in sorted(("alpha", "beta", "gamma"))
        )
        model = ClassifierModel(dim=dim, representatives=reps)
        claims = rng.uniform(-3, 3, (10_000, dim))
        evidences = rng.uniform(-3, 3, (10_000, dim))
        for claim, evidence in zip(claims, evidences):
            label, dists = predict(model, claim, evidence)
            query = [abs(float(e) - float(c)) for c, e in zip(claim, evidence)]
            best, best_d = None, math.inf
            for rep in reps:
                d = math.sqrt(sum((q - float(m)) ** 2 for q, m in zip(query, rep.mean)))
                if d < best_d:
                    best, best_d = rep.label, d
            assert label == best

        # constructed exact tie: two representatives equidistant from the query
        tie_model = ClassifierModel(
            dim=1,
            representatives=(
                ClassRepresentative(label="A", mean=np.array([0.0]), count=1),
                ClassRepresentative(label="B", mean=np.array([2.0]), count=1),
                ClassRepresentative(label="C", mean=np.array([2.0]), count=1),
            ),
        )
        label, dists = predict(tie_model, [0.0], [1.0])
        assert dists["A"] == dists["B"] == dists["C"]
        assert label == "A"
        far_tie = ClassifierModel(
            dim=1,
            representatives=(
                ClassRepresentative(label="A", mean=np.array([9.0]), count=1),
                ClassRepresentative(label="B", mean=np.array([2.0]), count=1),
                ClassRepresentative(label="C", mean=np.array([0.0]), count=1),
            ),
        )
        assert predict(far_tie, [0.0], [1.0])[0] == "B"


def test_criterion_3_separable_fixture():
    """3-class fixture with >=10x separation: accuracy 1.0 at every n, all seeds."""
    with criterion(3, "separable fixture yields accuracy 1.000 at every n for 10 seeds"):
        ds = separable_dataset(per_class=120, dim=8, spread=0.05)
        # sanity: inter-class separation really is >= 10x intra-class diameter
        diffs = {lab: np.stack([p.diff() for p in g]) for lab, g in ds.by_label().items()}
        diameters = [
            max(
                classifier.euclidean_distance(a, b)
                for a in vecs
                for b in vecs[:: max(1, len(vecs) // 10)]
            )
            for vecs in diffs.values()
        ]
        centers = {lab: vecs.mean(axis=0) for lab, vecs in diffs.items()}
        labs = sorted(centers)
        min_sep = min(
            classifier.euclidean_distance(centers[a], centers[b])
            for i, a in enumerate(labs)
            for b in labs[i + 1 :]
        )
        assert min_sep >= 10 * max(diameters)

        config = ExperimentConfig(shot_counts=DEFAULT_SHOT_COUNTS, seeds=DEFAULT_SEEDS)
        results = run_nshot_experiment(config, ds)
        for n, agg in results.items():
            assert agg.mean.accuracy == 1.0, f"n={n}: {agg.mean.accuracy}"
            assert agg.std.accuracy == 0.0


def test_criterion_4_null_model():
    """Random labels over identical embeddings: accuracy ~ 1/|labels|."""
    with criterion(4, "null model accuracy within 0.05 of chance over 10 seeds"):
        ds = null_dataset(per_class=120, dim=8, labels=("A", "B", "C"))
        config = ExperimentConfig(shot_counts=(10,), seeds=DEFAULT_SEEDS)
        results = run_nshot_experiment(config, ds)
        assert abs(results[10].mean.accuracy - 1 / 3) <= 0.05


def test_criterion_5_convergence_identity():
    """Curve == batch refits to 1e-9, and within the 2r/n envelope."""
    with criterion(5, "convergence curve matches batch refits and 2r/n envelope"):
        ds = separable_dataset(per_class=80, dim=6, spread=1.0)
        max_n, seed = 60, 123
        curve = convergence_curve(ds, max_n, seed)

        rng = PCG32(seed)
        groups = ds.by_label()
        orders = {
            lab: [groups[lab][i] for i in partial_shuffle(len(groups[lab]), max_n, rng)]
            for lab in ds.labels
        }
        radii = {}
        for lab in ds.labels:
            vecs = np.stack([p.diff() for p in groups[lab]])
            center = vecs.mean(axis=0)
            radii[lab] = max(classifier.euclidean_distance(v, center) for v in vecs)
        for point in curve:
            n = point.n
            for lab in ds.labels:
                chunk = [p.diff() for p in orders[lab][:n]]
                refit_n = np.mean(chunk, axis=0)
                refit_prev = np.mean(chunk[:-1], axis=0)
                expected = classifier.euclidean_distance(refit_n, refit_prev)
                assert abs(point.per_class[lab] - expected) <= TOL
                assert point.per_class[lab] <= 2 * radii[lab] / n + TOL


def test_criterion_6_experiment_determinism(tmp_path):
    """Two full experiment invocations write byte-identical CSVs."""
    with criterion(6, "repeated experiment runs are byte-identical"):
        data = tmp_path / "data.jsonl"
        save_embedded_dataset(separable_dataset(per_class=25, dim=4), data)
        args = [
            "experiment",
            "--data", str(data),
            "--shots", "2,4,8",
            "--seeds", "123,124,125",
        ]
        out1, out2 = tmp_path / "r1.csv", tmp_path / "r2.csv"
        assert main(args + ["--out", str(out1)]) == 0
        assert main(args + ["--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()
        with open(out1) as fh:
            assert len(list(csv.DictReader(fh))) == 3 * 4  # 3 n * (acc + 3 f1)


def test_criterion_7_metrics_oracle():
    """Accuracy and classwise F1 exact on hand-computed fixtures."""
    with criterion(7, "metrics match hand-computed confusion values exactly"):
        cm = confusion(["A", "A", "B"], ["A", "B", "B"], ["A", "B"])
        assert cm.counts.tolist() == [[1, 1], [0, 1]]
        assert accuracy(cm) == 2 / 3
        f1 = classwise_f1(cm)
        assert f1["A"] == 2 * (1.0 * 0.5) / 1.5
        assert f1["B"] == 2 * (0.5 * 1.0) / 1.5

        perfect = confusion(["A", "B", "C"], ["A", "B", "C"], ["A", "B", "C"])
        assert accuracy(perfect) == 1.0
        assert all(v == 1.0 for v in classwise_f1(perfect).values())

        from semdiff.metrics import RunMetrics

        agg = aggregate(
            [
                RunMetrics(accuracy=0.5, f1_per_class={"A": 0.5}),
                RunMetrics(accuracy=0.7, f1_per_class={"A": 0.7}),
            ]
        )
        assert agg.mean.accuracy == pytest.approx(0.6, abs=1e-12)
        assert agg.std.accuracy == pytest.approx(math.sqrt(0.02), abs=1e-12)
