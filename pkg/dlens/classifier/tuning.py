"""
Threshold Tuning

Exhaustive grid search for the threshold that maximizes macro F1. Ties go
to the smallest threshold.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from ..errors import EmptyInput, InvalidThreshold, LengthMismatch
from .evaluation import EvalReport, evaluate
from .labels import Label
from .thresholds import ABSOLUTE, RATIO, Score, ThresholdConfig, classify

DEFAULT_ABSOLUTE_GRID = list(range(0, 11))
DEFAULT_RATIO_GRID = [round(i / 100, 2) for i in range(1, 51)]


def default_grid(mode: str) -> List[float]:
    return list(DEFAULT_RATIO_GRID if mode == RATIO else DEFAULT_ABSOLUTE_GRID)


@dataclass(frozen=True)
class GridPoint:
    t: float
    macro_f1: float
    report: EvalReport = field(compare=False, repr=False)

    def to_dict(self, decimals: int = 2) -> dict:
        return {"t": self.t, "macro_f1": self.report.to_dict(decimals)["macro_f1"]}


@dataclass(frozen=True)
class TuningResult:
    mode: str
    best_t: float
    best_macro_f1: float
    grid_results: List[GridPoint]

    @property
    def best_report(self) -> EvalReport:
        return next(point.report for point in self.grid_results if point.t == self.best_t)

    def to_dict(self, decimals: int = 2) -> dict:
        return {
            "mode": self.mode,
            "best_t": self.best_t,
            "best_macro_f1": self.best_report.to_dict(decimals)["macro_f1"],
            "grid": [point.to_dict(decimals) for point in self.grid_results],
        }


def tune_threshold(
    pairs: Sequence[Tuple[Score, Score]],
    truths: Sequence[Label],
    mode: str = ABSOLUTE,
    grid: Optional[Sequence[float]] = None,
) -> TuningResult:
    """
    Pick the grid threshold with the highest macro F1

    Args:
        pairs: (decompiled score, original score) per file pair
        truths: ground-truth label per pair
        mode: absolute or ratio
        grid: candidate thresholds; defaults to 0..10 (absolute) or 0.01..0.50 (ratio)

    Returns:
        TuningResult with every grid point in ascending t order
    """
    if len(pairs) != len(truths):
        raise LengthMismatch(f"{len(pairs)} pairs but {len(truths)} truths")
    if not pairs:
        raise EmptyInput("nothing to tune on")
    candidates = sorted(set(default_grid(mode) if grid is None else grid))
    if not candidates:
        raise InvalidThreshold("threshold grid is empty")

    results: List[GridPoint] = []
    best: Optional[GridPoint] = None
    for t in candidates:
        config = ThresholdConfig(mode, t)
        predictions = [classify(x, ori, config) for x, ori in pairs]
        report = evaluate(predictions, truths)
        point = GridPoint(t=t, macro_f1=report.macro_f1, report=report)
        results.append(point)
        if best is None or point.macro_f1 > best.macro_f1:
            best = point

    logger.info(f"Tuned {mode} threshold: t={best.t} (macro F1 {best.macro_f1:.4f}) over {len(candidates)} grid points")
    return TuningResult(mode=mode, best_t=best.t, best_macro_f1=best.macro_f1, grid_results=results)
