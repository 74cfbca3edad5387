"""
Cognitive Complexity

Base understandability metric over a parsed compilation unit:
  - +1 for each break in the linear flow (if, else-if, else, loops, switch,
    catch, ternary, labeled break/continue)
  - +nesting for those structures that sit inside other nesting structures
  - +1 for each run of like boolean operators in a condition

Method declarations and plain blocks cost nothing. Recursion is not counted
since no symbol resolution is available.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from loguru import logger

from ..frontend.nodes import UNIT_KINDS, NodeKind, Span, SyntaxNode, SyntaxUnit
from ..frontend.structure import nesting_depth, outermost_unit, unit_name


LOGICAL_OPERATORS = frozenset({"&&", "||"})

# Structures charged 1 + nesting
NESTING_STRUCTURES = {
    NodeKind.IF: "if",
    NodeKind.FOR: "for",
    NodeKind.ENHANCED_FOR: "enhanced-for",
    NodeKind.WHILE: "while",
    NodeKind.DO_WHILE: "do-while",
    NodeKind.SWITCH: "switch",
    NodeKind.CATCH: "catch",
    NodeKind.TERNARY: "ternary",
}

NESTING_REASONS = frozenset(NESTING_STRUCTURES.values())


@dataclass(frozen=True)
class Increment:
    """One ledger entry; `nesting` is the depth of the charged structure"""
    span: Span
    reason: str
    amount: int
    nesting: int
    unit: str

    def to_dict(self) -> dict:
        return {
            "span": str(self.span),
            "reason": self.reason,
            "amount": self.amount,
            "nesting": self.nesting,
            "unit": self.unit,
        }


@dataclass(frozen=True)
class MethodScore:
    name: str
    span: Span
    total: int

    def to_dict(self) -> dict:
        return {"name": self.name, "span": str(self.span), "total": self.total}


@dataclass
class CcBreakdown:
    """Base score with its auditable increment ledger"""
    per_increment: List[Increment] = field(default_factory=list)
    methods: List[MethodScore] = field(default_factory=list)

    @property
    def file_total(self) -> int:
        return sum(method.total for method in self.methods)

    @property
    def method_totals(self) -> Dict[str, int]:
        totals: Dict[str, int] = {}
        for method in self.methods:
            totals[method.name] = totals.get(method.name, 0) + method.total
        return totals

    def method_total(self, name: str) -> int:
        return self.method_totals.get(name, 0)

    def to_dict(self) -> dict:
        return {
            "file_total": self.file_total,
            "methods": [method.to_dict() for method in self.methods],
            "per_increment": [increment.to_dict() for increment in self.per_increment],
        }


def strip_parentheses_up(node: SyntaxNode) -> Optional[SyntaxNode]:
    """Closest ancestor of `node` that is not a parenthesized expression"""
    parent = node.parent
    while parent is not None and parent.kind is NodeKind.PARENTHESIZED:
        parent = parent.parent
    return parent


def is_logical(node: Optional[SyntaxNode]) -> bool:
    return node is not None and node.kind is NodeKind.BINARY and node.operator in LOGICAL_OPERATORS


def logical_operator_sequence(root: SyntaxNode) -> List[Tuple[str, SyntaxNode]]:
    """
    In-order logical operators of one condition, looking through parentheses

    Negation and any other expression end the sequence; their own
    conditions are separate roots.
    """
    sequence: List[Tuple[str, SyntaxNode]] = []
    stack: List[Tuple[SyntaxNode, bool]] = [(root, False)]
    while stack:
        node, emit = stack.pop()
        if emit:
            sequence.append((node.operator, node))
            continue
        if node.kind is NodeKind.PARENTHESIZED:
            stack.extend((child, False) for child in reversed(node.children))
        elif is_logical(node):
            stack.append((node.child("right"), False))
            stack.append((node, True))
            stack.append((node.child("left"), False))
    return sequence


def logical_sequence_roots(unit: SyntaxUnit) -> Iterator[SyntaxNode]:
    for node in unit.walk():
        if is_logical(node) and not is_logical(strip_parentheses_up(node)):
            yield node


def increment_owner(node: SyntaxNode) -> SyntaxNode:
    """Scored unit an increment belongs to"""
    unit = outermost_unit(node)
    if unit is not None:
        return unit
    declaration = node.enclosing(NodeKind.FIELD_DECLARATION)
    if declaration is not None:
        return declaration
    root = node
    while root.parent is not None:
        root = root.parent
    return root


class CognitiveComplexityCalculator:
    """
    Walks a SyntaxUnit and records one Increment per charged construct
    """

    def calculate(self, unit: SyntaxUnit) -> CcBreakdown:
        owners: Dict[int, SyntaxNode] = {}
        increments: List[Tuple[SyntaxNode, Increment]] = []

        def charge(node: SyntaxNode, span: Span, reason: str, amount: int, nesting: int):
            owner = increment_owner(node)
            owners[id(owner)] = owner
            increments.append((owner, Increment(span, reason, amount, nesting, unit_name_of(owner))))

        for node in unit.walk():
            if node.kind in NESTING_STRUCTURES:
                depth = nesting_depth(node)
                if node.is_else_if:
                    charge(node, node.span, "else-if", 1, depth)
                else:
                    charge(node, node.span, NESTING_STRUCTURES[node.kind], 1 + depth, depth)
                if node.kind is NodeKind.IF:
                    alternative = node.child("alternative")
                    if alternative is not None and alternative.kind is not NodeKind.IF:
                        charge(node, alternative.span, "else", 1, depth)
            elif node.kind in (NodeKind.BREAK, NodeKind.CONTINUE):
                if any(child.kind is NodeKind.IDENTIFIER for child in node.children):
                    charge(node, node.span, f"labeled-{node.kind.value}", 1, nesting_depth(node))

        for root in logical_sequence_roots(unit):
            previous = None
            for operator, owner_node in logical_operator_sequence(root):
                if operator != previous:
                    charge(owner_node, owner_node.span, f"logical-sequence {operator}", 1, 0)
                previous = operator

        increments.sort(key=lambda entry: (entry[1].span, entry[1].reason))
        breakdown = CcBreakdown(per_increment=[increment for _, increment in increments])

        totals: Dict[int, int] = {}
        for owner, increment in increments:
            totals[id(owner)] = totals.get(id(owner), 0) + increment.amount

        # Every top-level method-like unit is listed; other owners only when charged
        units = [node for node in unit.nodes_of(*UNIT_KINDS) if outermost_unit(node) is node]
        for node in units:
            owners[id(node)] = node
        for owner in sorted(owners.values(), key=lambda node: node.span):
            breakdown.methods.append(
                MethodScore(name=unit_name_of(owner), span=owner.span, total=totals.get(id(owner), 0))
            )

        logger.debug(
            f"Cognitive Complexity of {unit.path}: {breakdown.file_total} "
            f"over {len(breakdown.methods)} units"
        )
        return breakdown


def unit_name_of(owner: SyntaxNode) -> str:
    if owner.kind is NodeKind.COMPILATION_UNIT:
        return "<top-level>"
    return unit_name(owner)


def cognitive_complexity(unit: SyntaxUnit) -> CcBreakdown:
    """Base Cognitive Complexity of every unit in `unit`"""
    return CognitiveComplexityCalculator().calculate(unit)
