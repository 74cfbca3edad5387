"""
Relative Classifier Module

Less/Equi/More classification of (decompiled, original) score pairs,
threshold tuning and precision/recall/F1 evaluation.
"""

from .evaluation import (
    ClassMetrics,
    ConfusionMatrix,
    EvalReport,
    evaluate,
    evaluate_by_group,
    evaluate_matrix,
)
from .labels import LABEL_ORDER, Label
from .thresholds import (
    ABSOLUTE,
    MODES,
    RATIO,
    ThresholdConfig,
    classify,
    classify_absolute,
    classify_ratio,
)
from .tuning import DEFAULT_ABSOLUTE_GRID, DEFAULT_RATIO_GRID, GridPoint, TuningResult, default_grid, tune_threshold

__all__ = [
    "ClassMetrics",
    "ConfusionMatrix",
    "EvalReport",
    "evaluate",
    "evaluate_by_group",
    "evaluate_matrix",
    "LABEL_ORDER",
    "Label",
    "ABSOLUTE",
    "MODES",
    "RATIO",
    "ThresholdConfig",
    "classify",
    "classify_absolute",
    "classify_ratio",
    "DEFAULT_ABSOLUTE_GRID",
    "DEFAULT_RATIO_GRID",
    "GridPoint",
    "TuningResult",
    "default_grid",
    "tune_threshold",
]
