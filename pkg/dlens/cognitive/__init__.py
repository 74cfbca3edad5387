"""
Cognitive Complexity Module

Rule-based understandability metrics: base Cognitive Complexity, the
decompilation-aware Cognitive Complexity^D (rules R1-R6) and detection of
the six decompiler code patterns (P1-P6).
"""

from typing import Any, Dict, List, Optional, Sequence

from ..frontend.nodes import SyntaxUnit
from .ccd import CcdBreakdown, CcdCalculator, CcdConfig, RuleIncrement, cognitive_complexity_d, rule_summary
from .complexity import CcBreakdown, CognitiveComplexityCalculator, Increment, MethodScore, cognitive_complexity
from .patterns import PatternChecker, PatternLocation, PatternReport, detect_patterns
from .rules import PATTERN_IDS, RULE_IDS, RuleCatalog, RuleDefinition, RuleKind

__all__ = [
    "CcBreakdown",
    "CcdBreakdown",
    "CcdCalculator",
    "CcdConfig",
    "CognitiveComplexityCalculator",
    "Increment",
    "MethodScore",
    "RuleIncrement",
    "PatternChecker",
    "PatternLocation",
    "PatternReport",
    "RuleCatalog",
    "RuleDefinition",
    "RuleKind",
    "RULE_IDS",
    "PATTERN_IDS",
    "cognitive_complexity",
    "cognitive_complexity_d",
    "detect_patterns",
    "rule_summary",
    "CognitiveAnalyzer",
]


class CognitiveAnalyzer:
    """
    Runs the base metric, the CC^D rules and the pattern checker over one
    unit with a shared configuration
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        Args:
            config: mapping with optional `ccd` and `patterns` sections
        """
        self.config = config or {}
        ccd_section = self.config.get("ccd", {})
        self.ccd_config = CcdConfig.from_dict(ccd_section)
        self.ccd_calculator = CcdCalculator(self.ccd_config)

        pattern_section = dict(self.config.get("patterns", {}))
        pattern_section.setdefault("r3_threshold", self.ccd_config.r3_threshold)
        pattern_section.setdefault("r6_exempt", tuple(self.ccd_config.r6_exempt))
        self.pattern_checker = PatternChecker(pattern_section)

    def analyze(self, unit: SyntaxUnit) -> Dict[str, Any]:
        """
        Score one unit

        Returns:
            Dictionary with `cc`, `ccd` and `patterns` results
        """
        base = cognitive_complexity(unit)
        ccd = self.ccd_calculator.calculate(unit, base)
        patterns = self.pattern_checker.check(unit)
        return {"path": unit.path, "cc": base, "ccd": ccd, "patterns": patterns}

    def get_pattern_statistics(self, present: List[Sequence[str]]) -> Dict[str, Any]:
        """
        Number of files containing each pattern

        Args:
            present: pattern ids found in each file (PatternReport.present)
        """
        counts = {pattern_id: sum(1 for ids in present if pattern_id in ids) for pattern_id in PATTERN_IDS}
        return {
            "total_files": len(present),
            "files_with_pattern": counts,
            "files_with_any_pattern": sum(1 for ids in present if ids),
        }
