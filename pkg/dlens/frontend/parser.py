"""
Java Parser

Builds the immutable SyntaxUnit tree from tree-sitter's concrete syntax tree.
Only named grammar nodes survive the conversion (comments are dropped);
operator tokens are folded into the `operator` field of their expression.
"""

import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple, Union

import tree_sitter_java as tsjava
from loguru import logger
from tree_sitter import Language, Node, Parser

from ..errors import ParseError
from .nodes import NodeKind, SourceLine, Span, SyntaxNode, SyntaxUnit


JAVA_LANGUAGE = Language(tsjava.language())

# tree-sitter parsers are not thread-safe; keep one per worker thread
_local = threading.local()


def _get_parser() -> Parser:
    parser = getattr(_local, "parser", None)
    if parser is None:
        parser = Parser(JAVA_LANGUAGE)
        _local.parser = parser
    return parser


_KIND_BY_TYPE = {
    "program": NodeKind.COMPILATION_UNIT,
    "class_declaration": NodeKind.TYPE_DECLARATION,
    "interface_declaration": NodeKind.TYPE_DECLARATION,
    "enum_declaration": NodeKind.TYPE_DECLARATION,
    "record_declaration": NodeKind.TYPE_DECLARATION,
    "annotation_type_declaration": NodeKind.TYPE_DECLARATION,
    "class_body": NodeKind.CLASS_BODY,
    "interface_body": NodeKind.CLASS_BODY,
    "enum_body": NodeKind.CLASS_BODY,
    "enum_body_declarations": NodeKind.CLASS_BODY,
    "annotation_type_body": NodeKind.CLASS_BODY,
    "method_declaration": NodeKind.METHOD_DECLARATION,
    "constructor_declaration": NodeKind.CONSTRUCTOR_DECLARATION,
    "compact_constructor_declaration": NodeKind.CONSTRUCTOR_DECLARATION,
    "static_initializer": NodeKind.INITIALIZER,
    "field_declaration": NodeKind.FIELD_DECLARATION,
    "constant_declaration": NodeKind.FIELD_DECLARATION,
    "modifiers": NodeKind.MODIFIERS,
    "annotation": NodeKind.ANNOTATION,
    "marker_annotation": NodeKind.ANNOTATION,
    "block": NodeKind.BLOCK,
    "constructor_body": NodeKind.BLOCK,
    "if_statement": NodeKind.IF,
    "for_statement": NodeKind.FOR,
    "enhanced_for_statement": NodeKind.ENHANCED_FOR,
    "while_statement": NodeKind.WHILE,
    "do_statement": NodeKind.DO_WHILE,
    "switch_expression": NodeKind.SWITCH,
    "switch_statement": NodeKind.SWITCH,
    "try_statement": NodeKind.TRY,
    "try_with_resources_statement": NodeKind.TRY,
    "catch_clause": NodeKind.CATCH,
    "finally_clause": NodeKind.FINALLY,
    "break_statement": NodeKind.BREAK,
    "continue_statement": NodeKind.CONTINUE,
    "labeled_statement": NodeKind.LABELED,
    "return_statement": NodeKind.RETURN,
    "expression_statement": NodeKind.EXPRESSION_STATEMENT,
    "local_variable_declaration": NodeKind.LOCAL_VARIABLE,
    "ternary_expression": NodeKind.TERNARY,
    "binary_expression": NodeKind.BINARY,
    "instanceof_expression": NodeKind.BINARY,
    "assignment_expression": NodeKind.ASSIGNMENT,
    "parenthesized_expression": NodeKind.PARENTHESIZED,
    "lambda_expression": NodeKind.LAMBDA,
    "method_invocation": NodeKind.METHOD_INVOCATION,
    "object_creation_expression": NodeKind.OBJECT_CREATION,
    "decimal_integer_literal": NodeKind.NUMERIC_LITERAL,
    "hex_integer_literal": NodeKind.NUMERIC_LITERAL,
    "octal_integer_literal": NodeKind.NUMERIC_LITERAL,
    "binary_integer_literal": NodeKind.NUMERIC_LITERAL,
    "decimal_floating_point_literal": NodeKind.NUMERIC_LITERAL,
    "hex_floating_point_literal": NodeKind.NUMERIC_LITERAL,
    "string_literal": NodeKind.STRING_LITERAL,
    "character_literal": NodeKind.CHAR_LITERAL,
    "true": NodeKind.BOOLEAN_LITERAL,
    "false": NodeKind.BOOLEAN_LITERAL,
    "null_literal": NodeKind.NULL_LITERAL,
    "identifier": NodeKind.IDENTIFIER,
}

_UNARY_KINDS = {
    "-": NodeKind.UNARY_MINUS,
    "+": NodeKind.UNARY_PLUS,
    "!": NodeKind.LOGICAL_NOT,
    "~": NodeKind.BITWISE_NOT,
}

# Leaves whose inner structure (string fragments, escapes) is irrelevant
_COLLAPSED = {
    "string_literal", "character_literal", "text_block",
    "decimal_integer_literal", "hex_integer_literal", "octal_integer_literal",
    "binary_integer_literal", "decimal_floating_point_literal", "hex_floating_point_literal",
}

_COMMENTS = {"line_comment", "block_comment", "comment"}

# (parent grammar type, field) pairs whose statement child records has_braces
_BODY_FIELDS = {
    ("if_statement", "consequence"),
    ("if_statement", "alternative"),
    ("for_statement", "body"),
    ("enhanced_for_statement", "body"),
    ("while_statement", "body"),
    ("do_statement", "body"),
}


@dataclass
class _Frame:
    """Pending conversion of one tree-sitter node"""
    ts_node: Node
    role: Optional[str]
    parent_type: Optional[str]
    pending: List[Tuple[Node, Optional[str]]] = field(default_factory=list)
    children: List[SyntaxNode] = field(default_factory=list)


class JavaParser:
    """
    Converts Java source into a SyntaxUnit

    The conversion is iterative so that long operator chains (string
    concatenations in decompiled code) cannot exhaust the interpreter stack.
    """

    def __init__(self, path: Optional[str] = None):
        self.path = path

    def parse(self, source: Union[str, bytes]) -> SyntaxUnit:
        data = source.encode("utf-8") if isinstance(source, str) else source
        text = data.decode("utf-8", errors="replace")
        self._byte_lines = data.split(b"\n")

        tree = _get_parser().parse(data)
        if tree.root_node.has_error:
            line, column, message = self._first_error(tree.root_node)
            raise ParseError(message, line, column, self.path)

        root = self._convert(tree.root_node)
        _link_parents(root)

        source_lines = tuple(
            SourceLine(
                number=i + 1,
                text=line.rstrip("\r"),
                byte_length=len(line.rstrip("\r").encode("utf-8")),
            )
            for i, line in enumerate(text.split("\n"))
        )
        logger.debug(f"Parsed {self.path or '<source>'}: {len(source_lines)} lines")
        return SyntaxUnit(path=self.path or "<source>", root=root, source_lines=source_lines)

    # ------------------------------------------------------------ positions

    def _column(self, row: int, byte_column: int) -> int:
        """tree-sitter columns count bytes; report characters, 1-based"""
        if row >= len(self._byte_lines):
            return byte_column + 1
        prefix = self._byte_lines[row][:byte_column]
        return len(prefix.decode("utf-8", errors="replace")) + 1

    def _span(self, ts_node: Node) -> Span:
        (start_row, start_col), (end_row, end_col) = ts_node.start_point, ts_node.end_point
        return Span(
            start_line=start_row + 1,
            start_col=self._column(start_row, start_col),
            end_line=end_row + 1,
            end_col=self._column(end_row, end_col),
        )

    def _first_error(self, root: Node) -> Tuple[int, int, str]:
        """Earliest ERROR or MISSING node in source order"""
        best = None
        stack = [root]
        while stack:
            node = stack.pop()
            if node.is_error or node.is_missing:
                key = node.start_point
                if best is None or key < best.start_point:
                    best = node
                continue
            if node.has_error:
                stack.extend(node.children)

        if best is None:
            return 1, 1, "malformed compilation unit"
        row, byte_col = best.start_point
        if best.is_missing:
            message = f"missing {best.type!r}"
        else:
            snippet = best.text.decode("utf-8", errors="replace").split("\n")[0][:40] if best.text else ""
            message = f"unexpected input {snippet!r}"
        return row + 1, self._column(row, byte_col), message

    # ----------------------------------------------------------- conversion

    def _pending_children(self, ts_node: Node) -> List[Tuple[Node, Optional[str]]]:
        if ts_node.type in _COLLAPSED:
            return []
        children = []
        for index, child in enumerate(ts_node.children):
            role = ts_node.field_name_for_child(index)
            if child.type in _COMMENTS:
                continue
            if child.is_named:
                children.append((child, role))
            elif (ts_node.type, role) in _BODY_FIELDS:
                # `while (x);` keeps a bodiless statement so R4 can see it
                children.append((child, role))
        children.reverse()
        return children

    def _convert(self, ts_root: Node) -> SyntaxNode:
        stack = [_Frame(ts_root, None, None, self._pending_children(ts_root))]
        result = None
        while stack:
            frame = stack[-1]
            if frame.pending:
                child, role = frame.pending.pop()
                stack.append(_Frame(child, role, frame.ts_node.type, self._pending_children(child)))
                continue
            stack.pop()
            node = self._make_node(frame)
            if stack:
                stack[-1].children.append(node)
            else:
                result = node
        return result

    def _make_node(self, frame: _Frame) -> SyntaxNode:
        ts_node = frame.ts_node
        grammar_type = ts_node.type if ts_node.is_named else "empty_statement"
        kind = _KIND_BY_TYPE.get(grammar_type, NodeKind.OTHER)
        operator = None

        if grammar_type == "block" and frame.parent_type in ("class_body", "enum_body_declarations"):
            kind = NodeKind.INITIALIZER
        elif grammar_type in ("binary_expression", "assignment_expression"):
            operator = ts_node.child_by_field_name("operator").type
        elif grammar_type == "instanceof_expression":
            operator = "instanceof"
        elif grammar_type == "ternary_expression":
            operator = "?:"
        elif grammar_type == "unary_expression":
            kind = _UNARY_KINDS[ts_node.child_by_field_name("operator").type]

        has_braces = None
        if (frame.parent_type, frame.role) in _BODY_FIELDS:
            else_if = frame.parent_type == "if_statement" and frame.role == "alternative" \
                and grammar_type == "if_statement"
            if not else_if:
                has_braces = grammar_type == "block"

        text = None
        if not frame.children or kind is NodeKind.MODIFIERS:
            text = ts_node.text.decode("utf-8", errors="replace") if ts_node.text else ""

        return SyntaxNode(
            kind=kind,
            grammar_type=grammar_type,
            span=self._span(ts_node),
            children=tuple(frame.children),
            operator=operator,
            has_braces=has_braces,
            text=text,
            role=frame.role,
        )


def _link_parents(root: SyntaxNode) -> None:
    for node in root.walk():
        for child in node.children:
            object.__setattr__(child, "parent", node)


def parse(source: Union[str, bytes], path: Optional[str] = None) -> SyntaxUnit:
    """
    Parse Java source text into a SyntaxUnit

    Raises:
        ParseError: at the first offending position; no partial tree is returned
    """
    return JavaParser(path).parse(source)


def parse_file(path: Union[str, Path]) -> SyntaxUnit:
    """Parse a UTF-8 Java file"""
    path = Path(path)
    return parse(path.read_bytes(), str(path))
