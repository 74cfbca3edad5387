"""
Pattern Checker Module

Reports where the six decompiler code patterns occur in a compilation unit.
P2/P4/P5/P6 share their locators with rules R2/R4/R5/R6, P3 uses the long-line
threshold of R3, and P1 counts conditional/loop block depth.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from loguru import logger

from ..frontend.nodes import Span, SyntaxUnit
from .rules import PATTERN_IDS
from .sites import (
    deep_nesting_sites,
    inlined_assignments,
    long_lines,
    mixed_operator_sites,
    numeric_literal_sites,
    unbraced_bodies,
)


@dataclass(frozen=True)
class PatternLocation:
    """One occurrence of a pattern"""
    path: str
    span: Span
    detail: str = ""

    def to_dict(self) -> dict:
        return {"path": self.path, "span": str(self.span), "detail": self.detail}


@dataclass
class PatternReport:
    """Pattern occurrences of one file; every pattern id is a key"""
    path: str
    per_pattern: Dict[str, List[PatternLocation]] = field(
        default_factory=lambda: {pattern_id: [] for pattern_id in PATTERN_IDS}
    )

    @property
    def present(self) -> List[str]:
        return [pattern_id for pattern_id in PATTERN_IDS if self.per_pattern.get(pattern_id)]

    def count(self, pattern_id: str) -> int:
        return len(self.per_pattern.get(pattern_id, []))

    def to_dict(self) -> dict:
        return {
            "path": self.path,
            "present": self.present,
            "counts": {pattern_id: self.count(pattern_id) for pattern_id in PATTERN_IDS},
            "locations": {
                pattern_id: [location.to_dict() for location in self.per_pattern[pattern_id]]
                for pattern_id in PATTERN_IDS
            },
        }


class PatternChecker:
    """
    Rule-based pattern detection over a parsed unit
    """

    def __init__(self, config: Dict[str, Any] = None):
        self.config = config or {}
        self.p1_min_depth = int(self.config.get("p1_min_depth", 3))
        self.long_line_threshold = int(self.config.get("r3_threshold", 120))
        self.r6_exempt = frozenset(self.config.get("r6_exempt", (-1, 0, 1)))

        self.checks = self.config.get("checks", {pattern_id: True for pattern_id in PATTERN_IDS})

    def check(self, unit: SyntaxUnit) -> PatternReport:
        """
        Detect all enabled patterns

        Args:
            unit: Parsed compilation unit

        Returns:
            PatternReport listing every pattern, with empty lists for absent ones
        """
        report = PatternReport(path=unit.path)
        detectors = {
            "P1": self.check_deep_nesting,
            "P2": self.check_mixed_operators,
            "P3": self.check_long_lines,
            "P4": self.check_omitted_braces,
            "P5": self.check_inlined_assignments,
            "P6": self.check_numeric_literals,
        }
        for pattern_id, detector in detectors.items():
            if self.checks.get(pattern_id, True):
                report.per_pattern[pattern_id] = detector(unit)

        logger.debug(f"Patterns in {unit.path}: {', '.join(report.present) or 'none'}")
        return report

    def check_deep_nesting(self, unit: SyntaxUnit) -> List[PatternLocation]:
        return [
            PatternLocation(unit.path, node.span, f"{node.kind.value} at depth {level}")
            for node, level in deep_nesting_sites(unit, self.p1_min_depth)
        ]

    def check_mixed_operators(self, unit: SyntaxUnit) -> List[PatternLocation]:
        return [
            PatternLocation(unit.path, mix.node.span, f"{mix.first} then {mix.second}")
            for mix in mixed_operator_sites(unit)
        ]

    def check_long_lines(self, unit: SyntaxUnit) -> List[PatternLocation]:
        return [
            PatternLocation(
                unit.path,
                Span(line.number, 1, line.number, line.length + 1),
                f"{line.length} characters",
            )
            for line in long_lines(unit, self.long_line_threshold)
        ]

    def check_omitted_braces(self, unit: SyntaxUnit) -> List[PatternLocation]:
        return [
            PatternLocation(unit.path, body.span, f"{body.parent.kind.value} without braces")
            for body in unbraced_bodies(unit)
        ]

    def check_inlined_assignments(self, unit: SyntaxUnit) -> List[PatternLocation]:
        return [
            PatternLocation(unit.path, node.span, f"'{node.operator}' inside expression")
            for node in inlined_assignments(unit)
        ]

    def check_numeric_literals(self, unit: SyntaxUnit) -> List[PatternLocation]:
        return [
            PatternLocation(unit.path, node.span, f"literal {node.text}")
            for node in numeric_literal_sites(unit, self.r6_exempt)
        ]


def detect_patterns(unit: SyntaxUnit, config: Optional[Dict[str, Any]] = None) -> PatternReport:
    """Locations of P1-P6 in `unit`"""
    return PatternChecker(config).check(unit)
