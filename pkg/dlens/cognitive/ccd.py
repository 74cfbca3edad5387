"""
Cognitive Complexity^D

Base Cognitive Complexity plus six increments for constructs decompilers
tend to produce:
  R1  deeply nested structures (nesting level >= 3)          +3 each
  R2  mixed operators without parentheses                     +3 per pair
  R3  physical lines longer than 120 characters               +floor(len / 120)
  R4  if/else/for/while/do bodies without braces              +4 each
  R5  assignments inlined into larger expressions             +4 each
  R6  numeric literals other than -1, 0, 1                    +1 each
"""

from dataclasses import dataclass, field, fields
from typing import Any, Dict, FrozenSet, List, Optional, Union

from loguru import logger

from ..errors import ConfigError
from ..frontend.nodes import Span, SyntaxUnit
from .complexity import NESTING_REASONS, CcBreakdown, cognitive_complexity
from .rules import RULE_IDS
from .sites import (
    inlined_assignments,
    long_lines,
    mixed_operator_sites,
    numeric_literal_sites,
    unbraced_bodies,
)

Amount = Union[int, float]

R3_MODES = ("floor", "ratio", "fixed")


@dataclass(frozen=True)
class CcdConfig:
    """Rule weights and thresholds"""
    r1_weight: int = 3
    r1_min_depth: int = 3
    r2_weight: int = 3
    r3_threshold: int = 120
    r3_mode: str = "floor"
    r3_fixed: int = 1
    r4_weight: int = 4
    r5_weight: int = 4
    r6_weight: int = 1
    r6_exempt: FrozenSet[int] = frozenset({-1, 0, 1})

    def __post_init__(self):
        if self.r3_mode not in R3_MODES:
            raise ConfigError(f"r3_mode must be one of {', '.join(R3_MODES)}, got {self.r3_mode!r}")
        if self.r3_threshold <= 0:
            raise ConfigError(f"r3_threshold must be positive, got {self.r3_threshold}")
        for name in ("r1_weight", "r2_weight", "r3_fixed", "r4_weight", "r5_weight", "r6_weight"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be nonnegative, got {getattr(self, name)}")

    @classmethod
    def from_dict(cls, values: Optional[Dict[str, Any]]) -> "CcdConfig":
        """Build from a config section, ignoring unknown keys"""
        values = dict(values or {})
        known = {f.name for f in fields(cls)}
        kwargs = {key: value for key, value in values.items() if key in known}
        if "r6_exempt" in kwargs:
            kwargs["r6_exempt"] = frozenset(kwargs["r6_exempt"])
        try:
            return cls(**kwargs)
        except TypeError as e:
            raise ConfigError(f"invalid ccd configuration: {e}") from e


@dataclass(frozen=True)
class RuleIncrement:
    rule_id: str
    span: Span
    amount: Amount
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "rule": self.rule_id,
            "span": str(self.span),
            "amount": self.amount,
            "detail": self.detail,
        }


@dataclass
class CcdBreakdown:
    """Base breakdown plus rule increments; totals are always derived"""
    base: CcBreakdown
    rule_increments: List[RuleIncrement] = field(default_factory=list)

    @property
    def file_total(self) -> Amount:
        return self.base.file_total + sum(increment.amount for increment in self.rule_increments)

    def increments_for(self, rule_id: str) -> List[RuleIncrement]:
        return [increment for increment in self.rule_increments if increment.rule_id == rule_id]

    def to_dict(self) -> dict:
        return {
            "file_total": self.file_total,
            "base_total": self.base.file_total,
            "rules": rule_summary(self),
            "rule_increments": [increment.to_dict() for increment in self.rule_increments],
        }


def _body_label(body) -> str:
    if body.role == "alternative":
        return "else body"
    return f"{body.parent.kind.value} body"


def long_line_amount(length: int, config: CcdConfig) -> Amount:
    if config.r3_mode == "ratio":
        return length / config.r3_threshold
    if config.r3_mode == "fixed":
        return config.r3_fixed
    return length // config.r3_threshold


class CcdCalculator:
    """
    Applies R1-R6 on top of a base Cognitive Complexity breakdown
    """

    def __init__(self, config: Optional[CcdConfig] = None):
        self.config = config or CcdConfig()

    def calculate(self, unit: SyntaxUnit, base: Optional[CcBreakdown] = None) -> CcdBreakdown:
        base = base if base is not None else cognitive_complexity(unit)
        increments: List[RuleIncrement] = []
        increments.extend(self.deep_nesting(base))
        increments.extend(self.mixed_operators(unit))
        increments.extend(self.long_lines(unit))
        increments.extend(self.omitted_braces(unit))
        increments.extend(self.inlined_assignments(unit))
        increments.extend(self.numeric_literals(unit))
        increments.sort(key=lambda increment: (increment.rule_id, increment.span))

        breakdown = CcdBreakdown(base=base, rule_increments=increments)
        logger.debug(
            f"Cognitive Complexity^D of {unit.path}: {breakdown.file_total} "
            f"(base {base.file_total}, {len(increments)} rule increments)"
        )
        return breakdown

    def deep_nesting(self, base: CcBreakdown) -> List[RuleIncrement]:
        """R1: structures charged a nesting increment at level >= r1_min_depth"""
        return [
            RuleIncrement("R1", entry.span, self.config.r1_weight, f"{entry.reason} at nesting {entry.nesting}")
            for entry in base.per_increment
            if entry.reason in NESTING_REASONS and entry.nesting >= self.config.r1_min_depth
        ]

    def mixed_operators(self, unit: SyntaxUnit) -> List[RuleIncrement]:
        """R2"""
        return [
            RuleIncrement("R2", mix.node.span, self.config.r2_weight, f"{mix.first} then {mix.second}")
            for mix in mixed_operator_sites(unit)
        ]

    def long_lines(self, unit: SyntaxUnit) -> List[RuleIncrement]:
        """R3: one increment per long physical line"""
        increments = []
        for line in long_lines(unit, self.config.r3_threshold):
            span = Span(line.number, 1, line.number, line.length + 1)
            amount = long_line_amount(line.length, self.config)
            increments.append(RuleIncrement("R3", span, amount, f"{line.length} characters"))
        return increments

    def omitted_braces(self, unit: SyntaxUnit) -> List[RuleIncrement]:
        """R4"""
        return [
            RuleIncrement("R4", body.span, self.config.r4_weight, _body_label(body))
            for body in unbraced_bodies(unit)
        ]

    def inlined_assignments(self, unit: SyntaxUnit) -> List[RuleIncrement]:
        """R5"""
        return [
            RuleIncrement("R5", node.span, self.config.r5_weight, f"'{node.operator}' inside expression")
            for node in inlined_assignments(unit)
        ]

    def numeric_literals(self, unit: SyntaxUnit) -> List[RuleIncrement]:
        """R6"""
        return [
            RuleIncrement("R6", node.span, self.config.r6_weight, f"literal {node.text}")
            for node in numeric_literal_sites(unit, self.config.r6_exempt)
        ]


def cognitive_complexity_d(unit: SyntaxUnit, config: Optional[CcdConfig] = None) -> CcdBreakdown:
    """Cognitive Complexity^D of `unit`"""
    return CcdCalculator(config).calculate(unit)


def rule_summary(breakdown: CcdBreakdown) -> Dict[str, Dict[str, Amount]]:
    """Per-rule occurrence count and summed amount, all six rules listed"""
    summary = {rule_id: {"count": 0, "amount": 0} for rule_id in RULE_IDS}
    for increment in breakdown.rule_increments:
        entry = summary[increment.rule_id]
        entry["count"] += 1
        entry["amount"] += increment.amount
    return summary
