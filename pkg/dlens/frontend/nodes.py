"""
Syntax Tree Model

Immutable structural tree of one Java compilation unit. The tree keeps the
named nodes of the grammar with 1-based spans, the operator of operator
expressions and, for statement bodies, whether braces were written.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional, Tuple


class NodeKind(str, Enum):
    """Node kinds the metric engines reason about; everything else is OTHER"""
    COMPILATION_UNIT = "compilation_unit"
    TYPE_DECLARATION = "type_declaration"
    CLASS_BODY = "class_body"
    METHOD_DECLARATION = "method_declaration"
    CONSTRUCTOR_DECLARATION = "constructor_declaration"
    INITIALIZER = "initializer"
    FIELD_DECLARATION = "field_declaration"
    MODIFIERS = "modifiers"
    ANNOTATION = "annotation"
    BLOCK = "block"
    IF = "if"
    FOR = "for"
    ENHANCED_FOR = "enhanced_for"
    WHILE = "while"
    DO_WHILE = "do_while"
    SWITCH = "switch"
    TRY = "try"
    CATCH = "catch"
    FINALLY = "finally"
    BREAK = "break"
    CONTINUE = "continue"
    LABELED = "labeled"
    RETURN = "return"
    EXPRESSION_STATEMENT = "expression_statement"
    LOCAL_VARIABLE = "local_variable"
    TERNARY = "ternary"
    BINARY = "binary"
    ASSIGNMENT = "assignment"
    UNARY_MINUS = "unary_minus"
    UNARY_PLUS = "unary_plus"
    LOGICAL_NOT = "logical_not"
    BITWISE_NOT = "bitwise_not"
    PARENTHESIZED = "parenthesized"
    LAMBDA = "lambda"
    METHOD_INVOCATION = "method_invocation"
    OBJECT_CREATION = "object_creation"
    NUMERIC_LITERAL = "numeric_literal"
    STRING_LITERAL = "string_literal"
    CHAR_LITERAL = "char_literal"
    BOOLEAN_LITERAL = "boolean_literal"
    NULL_LITERAL = "null_literal"
    IDENTIFIER = "identifier"
    OTHER = "other"


# Kinds that open a scored unit: file totals are the sum over these
UNIT_KINDS = frozenset({
    NodeKind.METHOD_DECLARATION,
    NodeKind.CONSTRUCTOR_DECLARATION,
    NodeKind.INITIALIZER,
})

LOOP_KINDS = frozenset({
    NodeKind.FOR, NodeKind.ENHANCED_FOR, NodeKind.WHILE, NodeKind.DO_WHILE,
})

# Statements whose body carries `has_braces`
BRACED_BODY_KINDS = frozenset({NodeKind.IF}) | LOOP_KINDS

OPERATOR_KINDS = frozenset({NodeKind.BINARY, NodeKind.ASSIGNMENT, NodeKind.TERNARY})

UNARY_KINDS = frozenset({
    NodeKind.UNARY_MINUS, NodeKind.UNARY_PLUS, NodeKind.LOGICAL_NOT, NodeKind.BITWISE_NOT,
})


@dataclass(frozen=True, order=True)
class Span:
    """Source extent; lines and columns are 1-based, end column exclusive"""
    start_line: int
    start_col: int
    end_line: int
    end_col: int

    def contains(self, other: "Span") -> bool:
        return (self.start_line, self.start_col) <= (other.start_line, other.start_col) \
            and (other.end_line, other.end_col) <= (self.end_line, self.end_col)

    def __str__(self) -> str:
        return f"{self.start_line}:{self.start_col}-{self.end_line}:{self.end_col}"

    def to_dict(self) -> dict:
        return {
            "start_line": self.start_line,
            "start_col": self.start_col,
            "end_line": self.end_line,
            "end_col": self.end_col,
        }


@dataclass(frozen=True)
class SyntaxNode:
    """
    One named node of the syntax tree

    `grammar_type` keeps the tree-sitter node type for kinds folded into
    OTHER; `role` is the field name under which the parent holds this node
    (condition, consequence, alternative, body, left, right, ...).
    """
    kind: NodeKind
    grammar_type: str
    span: Span
    children: Tuple["SyntaxNode", ...] = ()
    operator: Optional[str] = None
    has_braces: Optional[bool] = None
    text: Optional[str] = None
    role: Optional[str] = None
    parent: Optional["SyntaxNode"] = field(default=None, compare=False, repr=False, hash=False)

    def child(self, role: str) -> Optional["SyntaxNode"]:
        """First child held under `role`"""
        for child in self.children:
            if child.role == role:
                return child
        return None

    def children_in(self, role: str) -> Tuple["SyntaxNode", ...]:
        return tuple(child for child in self.children if child.role == role)

    def walk(self) -> Iterator["SyntaxNode"]:
        """Pre-order traversal including this node"""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def ancestors(self) -> Iterator["SyntaxNode"]:
        node = self.parent
        while node is not None:
            yield node
            node = node.parent

    def enclosing(self, *kinds: NodeKind) -> Optional["SyntaxNode"]:
        """Closest ancestor of one of `kinds`"""
        for ancestor in self.ancestors():
            if ancestor.kind in kinds:
                return ancestor
        return None

    @property
    def is_else_if(self) -> bool:
        """An `if` written directly after `else` continues its parent's chain"""
        return (
            self.kind is NodeKind.IF
            and self.role == "alternative"
            and self.parent is not None
            and self.parent.kind is NodeKind.IF
        )


@dataclass(frozen=True)
class SourceLine:
    """Raw physical line (without the line terminator)"""
    number: int
    text: str
    byte_length: int

    @property
    def length(self) -> int:
        return len(self.text)


@dataclass(frozen=True)
class SyntaxUnit:
    """Parsed compilation unit"""
    path: str
    root: SyntaxNode
    source_lines: Tuple[SourceLine, ...]

    def walk(self) -> Iterator[SyntaxNode]:
        return self.root.walk()

    def nodes_of(self, *kinds: NodeKind) -> Iterator[SyntaxNode]:
        return (node for node in self.walk() if node.kind in kinds)

    def methods(self) -> Tuple[SyntaxNode, ...]:
        """Method and constructor declarations, in source order"""
        return tuple(self.nodes_of(NodeKind.METHOD_DECLARATION, NodeKind.CONSTRUCTOR_DECLARATION))
