"""Few-shot claim veracity classification via semantic-difference vectors."""

from .classifier import (
    ClassifierModel,
    ClassRepresentative,
    diff_vector,
    euclidean_distance,
    fit,
    fit_incremental,
    predict,
    predict_batch,
)
from .dataset import EmbeddedDataset, EmbeddedPair
from .harness import (
    DEFAULT_SEEDS,
    DEFAULT_SHOT_COUNTS,
    ConvergencePoint,
    ExperimentConfig,
    convergence_curve,
    emit_convergence,
    emit_report,
    run_nshot_experiment,
    sample_shots,
)
from .metrics import (
    AggregateMetrics,
    ConfusionMatrix,
    RunMetrics,
    accuracy,
    aggregate,
    classwise_f1,
    confusion,
    run_metrics,
)

__all__ = [
    "AggregateMetrics",
    "ClassRepresentative",
    "ClassifierModel",
    "ConfusionMatrix",
    "ConvergencePoint",
    "DEFAULT_SEEDS",
    "DEFAULT_SHOT_COUNTS",
    "EmbeddedDataset",
    "EmbeddedPair",
    "ExperimentConfig",
    "RunMetrics",
    "accuracy",
    "aggregate",
    "classwise_f1",
    "confusion",
    "convergence_curve",
    "diff_vector",
    "emit_convergence",
    "emit_report",
    "euclidean_distance",
    "fit",
    "fit_incremental",
    "predict",
    "predict_batch",
    "run_metrics",
    "run_nshot_experiment",
    "sample_shots",
]
