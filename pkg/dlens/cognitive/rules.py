"""
Rule Catalog

Definitions of the six Cognitive Complexity^D rules and the six decompiler
code patterns they target. Used for report headers and pattern tables.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional


class RuleKind(Enum):
    """Whether an entry adds to the score or only marks a location"""
    RULE = "rule"
    PATTERN = "pattern"


@dataclass(frozen=True)
class RuleDefinition:
    """Definition of one rule or pattern"""
    rule_id: str
    name: str
    description: str
    kind: RuleKind
    paired_with: str


RULE_IDS = ("R1", "R2", "R3", "R4", "R5", "R6")
PATTERN_IDS = ("P1", "P2", "P3", "P4", "P5", "P6")


class RuleCatalog:
    """
    Container for all rule and pattern definitions
    """

    def __init__(self):
        self.rules = self._initialize_rules()

    def _initialize_rules(self) -> Dict[str, RuleDefinition]:
        """Initialize all rule and pattern definitions"""
        rules = {}

        # Score rules
        rules["R1"] = RuleDefinition(
            rule_id="R1",
            name="Deeply nested structures",
            description="+3 for each nesting structure whose nesting level is at least 3",
            kind=RuleKind.RULE,
            paired_with="P1",
        )

        rules["R2"] = RuleDefinition(
            rule_id="R2",
            name="Omitted parentheses in mixed-operator expressions",
            description="+3 for each adjacent pair of operators from different precedence classes "
                        "written without parentheses; arithmetic-only runs are exempt",
            kind=RuleKind.RULE,
            paired_with="P2",
        )

        rules["R3"] = RuleDefinition(
            rule_id="R3",
            name="Excessively long lines",
            description="+floor(length / 120) for each physical line longer than 120 characters",
            kind=RuleKind.RULE,
            paired_with="P3",
        )

        rules["R4"] = RuleDefinition(
            rule_id="R4",
            name="Omitted braces",
            description="+4 for each if/else/for/while/do body written without braces",
            kind=RuleKind.RULE,
            paired_with="P4",
        )

        rules["R5"] = RuleDefinition(
            rule_id="R5",
            name="Inlined assignments",
            description="+4 for each assignment nested inside a larger expression",
            kind=RuleKind.RULE,
            paired_with="P5",
        )

        rules["R6"] = RuleDefinition(
            rule_id="R6",
            name="Numerical literals in expressions",
            description="+1 for each numeric literal other than -1, 0 and 1",
            kind=RuleKind.RULE,
            paired_with="P6",
        )

        # Decompiler code patterns
        rules["P1"] = RuleDefinition(
            rule_id="P1",
            name="Deeply nested conditional or loop statements",
            description="conditional/loop block structures nested at depth 3 or more",
            kind=RuleKind.PATTERN,
            paired_with="R1",
        )

        rules["P2"] = RuleDefinition(
            rule_id="P2",
            name="Omitted parentheses in expressions with mixed operators",
            description="operators of different precedence classes mixed without parentheses",
            kind=RuleKind.PATTERN,
            paired_with="R2",
        )

        rules["P3"] = RuleDefinition(
            rule_id="P3",
            name="Excessively long statements",
            description="physical lines longer than the long-line threshold",
            kind=RuleKind.PATTERN,
            paired_with="R3",
        )

        rules["P4"] = RuleDefinition(
            rule_id="P4",
            name="Omitted braces after conditional or loop statements",
            description="if/else/for/while/do bodies written without braces",
            kind=RuleKind.PATTERN,
            paired_with="R4",
        )

        rules["P5"] = RuleDefinition(
            rule_id="P5",
            name="Inlined assignments in expressions",
            description="assignments used as a value inside another expression",
            kind=RuleKind.PATTERN,
            paired_with="R5",
        )

        rules["P6"] = RuleDefinition(
            rule_id="P6",
            name="Numerical literals instead of constants",
            description="numeric literals other than -1, 0 and 1 used in expressions",
            kind=RuleKind.PATTERN,
            paired_with="R6",
        )

        return rules

    def get_rule(self, rule_id: str) -> Optional[RuleDefinition]:
        """Get a definition by id"""
        return self.rules.get(rule_id)

    def get_rules_by_kind(self, kind: RuleKind) -> List[RuleDefinition]:
        """Get all definitions of one kind, in id order"""
        return sorted(
            (rule for rule in self.rules.values() if rule.kind is kind),
            key=lambda rule: rule.rule_id,
        )

    def rule_for(self, pattern_id: str) -> str:
        return self.rules[pattern_id].paired_with

