"""Supervised term weighting for short-text sentiment classification."""

from ._core import (
    GLOBAL_METRICS,
    LOCAL_SCHEMES,
    ConfigError,
    ContractViolation,
    Corpus,
    EvaluationError,
    IngestError,
    IoError,
    LinearModel,
    TrainingError,
    WeightingModel,
    aggregate,
    analyze,
    distribution_stats,
    fit,
    local_weight,
    minmax_normalize,
    score_predictions,
    tokenize,
    train,
)

__all__ = [
    "GLOBAL_METRICS",
    "LOCAL_SCHEMES",
    "ConfigError",
    "ContractViolation",
    "Corpus",
    "EvaluationError",
    "IngestError",
    "IoError",
    "LinearModel",
    "TrainingError",
    "WeightingModel",
    "aggregate",
    "analyze",
    "distribution_stats",
    "fit",
    "local_weight",
    "minmax_normalize",
    "score_predictions",
    "tokenize",
    "train",
]
