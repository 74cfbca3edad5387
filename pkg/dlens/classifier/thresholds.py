"""
Threshold Classification

absolute:  Less if x > ori + t,      More if x < ori - t,      else Equi
ratio:     Less if x > (1 + t) ori,  More if x < (1 - t) ori,  else Equi

x is the decompiled file's score and ori the original's; higher scores mean
harder to understand. Bounds are inclusive on the Equi side, and values
within floating-point noise of a bound count as on it.
"""

import math
import numbers
from dataclasses import dataclass
from typing import Union

from ..errors import InvalidThreshold, NonPositiveOriginal
from .labels import Label

Score = Union[int, float]

ABSOLUTE = "absolute"
RATIO = "ratio"
MODES = (ABSOLUTE, RATIO)

DEFAULT_ABSOLUTE_THRESHOLD = 3
DEFAULT_RATIO_THRESHOLD = 0.27


def _exceeds(value: float, bound: float) -> bool:
    return value > bound and not math.isclose(value, bound, rel_tol=1e-9, abs_tol=1e-12)


def _classify(x: Score, lower: float, upper: float) -> Label:
    if _exceeds(x, upper):
        return Label.LESS
    if _exceeds(lower, x):
        return Label.MORE
    return Label.EQUI


@dataclass(frozen=True)
class ThresholdConfig:
    """Threshold mode and value; ratio thresholds lie in [0, 1)"""
    mode: str = ABSOLUTE
    t: float = DEFAULT_ABSOLUTE_THRESHOLD

    def __post_init__(self):
        if self.mode not in MODES:
            raise InvalidThreshold(f"unknown threshold mode {self.mode!r}; expected absolute or ratio")
        if isinstance(self.t, bool) or not isinstance(self.t, numbers.Real) or math.isnan(self.t):
            raise InvalidThreshold(f"threshold must be a number, got {self.t!r}")
        if self.t < 0:
            raise InvalidThreshold(f"threshold must be nonnegative, got {self.t}")
        if self.mode == RATIO and self.t >= 1:
            raise InvalidThreshold(f"ratio threshold must be below 1, got {self.t}")

    @classmethod
    def default(cls, mode: str) -> "ThresholdConfig":
        return cls(mode, DEFAULT_ABSOLUTE_THRESHOLD if mode == ABSOLUTE else DEFAULT_RATIO_THRESHOLD)

    def to_dict(self) -> dict:
        return {"mode": self.mode, "t": self.t}


def classify_absolute(x: Score, ori: Score, t: float) -> Label:
    """Label from the absolute score difference"""
    if t < 0:
        raise InvalidThreshold(f"threshold must be nonnegative, got {t}")
    return _classify(x, ori - t, ori + t)


def classify_ratio(x: Score, ori: Score, t: float) -> Label:
    """
    Label from the score ratio

    Raises:
        NonPositiveOriginal: when ori <= 0
    """
    if not 0 <= t < 1:
        raise InvalidThreshold(f"ratio threshold must lie in [0, 1), got {t}")
    if ori <= 0:
        raise NonPositiveOriginal(f"ratio classification needs a positive original score, got {ori}")
    return _classify(x, (1 - t) * ori, (1 + t) * ori)


def classify(x: Score, ori: Score, config: ThresholdConfig) -> Label:
    """Dispatch on the configured mode"""
    if config.mode == RATIO:
        return classify_ratio(x, ori, config.t)
    return classify_absolute(x, ori, config.t)
