"""
Rule Sites

Locators for the decompiler-induced constructs. Each rule of Cognitive
Complexity^D and its paired code pattern read the same sites, so the two
reports always agree on where a construct occurs.
"""

from dataclasses import dataclass
from typing import Iterator, Optional, Tuple, Union

from ..frontend.nodes import LOOP_KINDS, UNIT_KINDS, NodeKind, SourceLine, SyntaxNode, SyntaxUnit
from ..frontend.structure import is_static_final


OPERATOR_CLASSES = {
    "+": "arithmetic", "-": "arithmetic", "*": "arithmetic", "/": "arithmetic", "%": "arithmetic",
    "<<": "shift", ">>": "shift", ">>>": "shift",
    "<": "relational", ">": "relational", "<=": "relational", ">=": "relational",
    "instanceof": "relational",
    "==": "equality", "!=": "equality",
    "&": "bitwise", "|": "bitwise", "^": "bitwise",
    "&&": "logical", "||": "logical",
}

COMPARISON_CLASSES = frozenset({"relational", "equality"})

# Layerings every reader expects: `a + b < c`, `x != null && y`
_CONVENTIONAL = (
    (frozenset({"arithmetic"}), COMPARISON_CLASSES),
    (COMPARISON_CLASSES, frozenset({"logical"})),
)

# Conditional/loop structures that open a block level for deep-nesting detection
BLOCK_NESTING_KINDS = frozenset({NodeKind.IF, NodeKind.SWITCH}) | LOOP_KINDS

Number = Union[int, float]


@dataclass(frozen=True)
class OperatorMix:
    """Operator classes of an expression and of its unparenthesized operand, in source order"""
    node: SyntaxNode
    first: str
    second: str


def operator_class(operator: str) -> Optional[str]:
    return OPERATOR_CLASSES.get(operator)


def is_conventional_pair(first: str, second: str) -> bool:
    for left, right in _CONVENTIONAL:
        if (first in left and second in right) or (first in right and second in left):
            return True
    return False


def mixed_operator_sites(unit: SyntaxUnit) -> Iterator[OperatorMix]:
    """
    One site per operator whose unparenthesized operand applies an operator
    of another, non-conventional class

    Operands are compared through the tree, so `a < b * c && p` is clean: the
    `*` belongs to the comparison and never meets the `&&`.
    """
    for node in unit.walk():
        if node.kind is not NodeKind.BINARY:
            continue
        outer = operator_class(node.operator)
        if outer is None:
            continue
        for role in ("left", "right"):
            operand = node.child(role)
            if operand is None or operand.kind is not NodeKind.BINARY:
                continue
            inner = operator_class(operand.operator)
            if inner is None or inner == outer:
                continue
            first, second = (inner, outer) if role == "left" else (outer, inner)
            if not is_conventional_pair(first, second):
                yield OperatorMix(node, first, second)


def long_lines(unit: SyntaxUnit, threshold: int) -> Iterator[SourceLine]:
    """Physical lines strictly longer than `threshold` characters"""
    return (line for line in unit.source_lines if line.length > threshold)


def unbraced_bodies(unit: SyntaxUnit) -> Iterator[SyntaxNode]:
    """if/else/for/while/do bodies written without braces"""
    return (node for node in unit.walk() if node.has_braces is False)


def _is_statement_assignment(node: SyntaxNode) -> bool:
    parent = node.parent
    if parent is None:
        return True
    if parent.kind is NodeKind.EXPRESSION_STATEMENT:
        return True
    if parent.kind is NodeKind.FOR and node.role in ("init", "update"):
        return True
    return parent.kind is NodeKind.LAMBDA and node.role == "body"


def inlined_assignments(unit: SyntaxUnit) -> Iterator[SyntaxNode]:
    """Assignments whose value is used by an enclosing expression"""
    return (
        node for node in unit.walk()
        if node.kind is NodeKind.ASSIGNMENT and not _is_statement_assignment(node)
    )


def numeric_value(text: str) -> Optional[Number]:
    """Value of a Java numeric literal, None when it cannot be read"""
    literal = text.replace("_", "")
    lower = literal.lower()
    if not lower:
        return None
    try:
        if lower.startswith("0x"):
            if "p" in lower:
                return float.fromhex(literal.rstrip("fFdD"))
            return int(literal.rstrip("lL"), 16)
        if lower.startswith("0b"):
            return int(literal[2:].rstrip("lL"), 2)
        if any(ch in lower for ch in ".e") or lower[-1] in "fd":
            return float(literal.rstrip("fFdD"))
        digits = literal.rstrip("lL")
        if len(digits) > 1 and digits.startswith("0"):
            return int(digits, 8)
        return int(digits)
    except ValueError:
        return None


def signed_literal_value(node: SyntaxNode) -> Optional[Number]:
    value = numeric_value(node.text or "")
    if value is not None and node.parent is not None and node.parent.kind is NodeKind.UNARY_MINUS:
        value = -value
    return value


def _in_constant_definition(node: SyntaxNode) -> bool:
    """Literal that defines a named constant or annotates a declaration"""
    for ancestor in node.ancestors():
        if ancestor.kind is NodeKind.ANNOTATION:
            return True
        if ancestor.kind in UNIT_KINDS or ancestor.kind is NodeKind.LAMBDA:
            return False
        if ancestor.kind is NodeKind.FIELD_DECLARATION:
            return is_static_final(ancestor)
        if ancestor.grammar_type == "enum_constant":
            return True
    return False


def numeric_literal_sites(unit: SyntaxUnit, exempt=frozenset({-1, 0, 1})) -> Iterator[SyntaxNode]:
    """Numeric literals in expressions other than the exempt values"""
    for node in unit.walk():
        if node.kind is not NodeKind.NUMERIC_LITERAL:
            continue
        if _in_constant_definition(node):
            continue
        value = signed_literal_value(node)
        if value is not None and value in exempt:
            continue
        yield node


def block_nesting_level(node: SyntaxNode) -> int:
    """1-based depth of a conditional/loop structure among its enclosing ones"""
    level = 1
    for ancestor in node.ancestors():
        if ancestor.kind in UNIT_KINDS:
            break
        if ancestor.kind in BLOCK_NESTING_KINDS and not ancestor.is_else_if:
            level += 1
    return level


def deep_nesting_sites(unit: SyntaxUnit, min_depth: int) -> Iterator[Tuple[SyntaxNode, int]]:
    """Conditional/loop structures nested at least `min_depth` levels deep"""
    for node in unit.walk():
        if node.kind in BLOCK_NESTING_KINDS and not node.is_else_if:
            level = block_nesting_level(node)
            if level >= min_depth:
                yield node, level
