"""
Classifier Evaluation

Confusion matrices (rows = predicted, columns = actual, ordered Less, Equi,
More) and the per-class precision/recall/F1 and macro F1 derived from them.
Zero denominators report 0. Rounding happens only in `to_dict`.
"""

from dataclasses import dataclass
from typing import Dict, Hashable, List, Sequence

import numpy as np
from sklearn.metrics import confusion_matrix

from ..errors import ClassifierError, EmptyInput, LengthMismatch
from ..utils.io_utils import round_half_away
from .labels import LABEL_ORDER, Label


def _safe_divide(numerator: float, denominator: float) -> float:
    return float(numerator) / float(denominator) if denominator else 0.0


@dataclass(frozen=True, eq=False)
class ConfusionMatrix:
    counts: np.ndarray

    def __post_init__(self):
        counts = np.asarray(self.counts)
        if counts.shape != (3, 3):
            raise ClassifierError(f"confusion matrix must be 3x3, got shape {counts.shape}")
        if not np.all(np.equal(np.mod(counts, 1), 0)) or np.any(counts < 0):
            raise ClassifierError("confusion matrix entries must be nonnegative integers")
        object.__setattr__(self, "counts", counts.astype(np.int64))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "ConfusionMatrix":
        """Build from three rows of predicted counts, columns actual"""
        try:
            counts = np.array(rows, dtype=float)
        except (TypeError, ValueError) as e:
            raise ClassifierError(f"confusion matrix must be numeric: {e}") from e
        return cls(counts)

    @classmethod
    def from_labels(cls, predictions: Sequence[Label], truths: Sequence[Label]) -> "ConfusionMatrix":
        if len(predictions) != len(truths):
            raise LengthMismatch(f"{len(predictions)} predictions but {len(truths)} truths")
        if not predictions:
            raise EmptyInput("nothing to evaluate")
        order = [label.value for label in LABEL_ORDER]
        # scikit-learn puts truths on rows; transpose to predicted x actual
        matrix = confusion_matrix(
            [Label(t).value for t in truths],
            [Label(p).value for p in predictions],
            labels=order,
        )
        return cls(matrix.T)

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def cell(self, predicted: Label, actual: Label) -> int:
        return int(self.counts[LABEL_ORDER.index(predicted), LABEL_ORDER.index(actual)])

    def to_rows(self) -> List[List[int]]:
        return [[int(v) for v in row] for row in self.counts]


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float

    def to_dict(self, decimals: int = 2) -> dict:
        return {
            "precision": round_half_away(self.precision, decimals),
            "recall": round_half_away(self.recall, decimals),
            "f1": round_half_away(self.f1, decimals),
        }


@dataclass(frozen=True)
class EvalReport:
    matrix: ConfusionMatrix
    per_class: Dict[Label, ClassMetrics]
    macro_f1: float

    def to_dict(self, decimals: int = 2) -> dict:
        """Presentation form, numbers rounded half away from zero"""
        return {
            "matrix": self.matrix.to_rows(),
            "total": self.matrix.total,
            "per_class": {label.value: self.per_class[label].to_dict(decimals) for label in LABEL_ORDER},
            "macro_f1": round_half_away(self.macro_f1, decimals),
        }


def evaluate_matrix(matrix: ConfusionMatrix) -> EvalReport:
    """Per-class metrics and macro F1 of a confusion matrix"""
    if matrix.total == 0:
        raise EmptyInput("confusion matrix is empty")
    counts = matrix.counts
    predicted_totals = counts.sum(axis=1)
    actual_totals = counts.sum(axis=0)

    per_class = {}
    for index, label in enumerate(LABEL_ORDER):
        true_positive = counts[index, index]
        precision = _safe_divide(true_positive, predicted_totals[index])
        recall = _safe_divide(true_positive, actual_totals[index])
        f1 = _safe_divide(2 * precision * recall, precision + recall)
        per_class[label] = ClassMetrics(precision, recall, f1)

    macro_f1 = float(np.mean([per_class[label].f1 for label in LABEL_ORDER]))
    return EvalReport(matrix=matrix, per_class=per_class, macro_f1=macro_f1)


def evaluate(predictions: Sequence[Label], truths: Sequence[Label]) -> EvalReport:
    """
    Compare predicted labels with ground truth

    Raises:
        LengthMismatch: lists differ in length
        EmptyInput: lists are empty
    """
    return evaluate_matrix(ConfusionMatrix.from_labels(predictions, truths))


def evaluate_by_group(
    predictions: Sequence[Label],
    truths: Sequence[Label],
    groups: Sequence[Hashable],
) -> Dict[Hashable, EvalReport]:
    """One report per group value (project, decompiler, ...), in sorted group order"""
    if not (len(predictions) == len(truths) == len(groups)):
        raise LengthMismatch(
            f"{len(predictions)} predictions, {len(truths)} truths, {len(groups)} group keys"
        )
    members: Dict[Hashable, List[int]] = {}
    for index, group in enumerate(groups):
        members.setdefault(group, []).append(index)
    return {
        group: evaluate([predictions[i] for i in indices], [truths[i] for i in indices])
        for group, indices in sorted(members.items(), key=lambda item: str(item[0]))
    }
