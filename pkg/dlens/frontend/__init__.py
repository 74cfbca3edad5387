"""
Syntax Frontend

Turns Java source text into the structures the metric engines read: an
immutable syntax tree (parse) and a comment-free token stream (lex).
"""

from .lexer import Token, TokenKind, iter_tokens, lex, token_texts
from .nodes import NodeKind, SourceLine, Span, SyntaxNode, SyntaxUnit
from .parser import JavaParser, parse, parse_file
from .structure import nesting_depth, outermost_unit, unit_name

__all__ = [
    "Token",
    "TokenKind",
    "iter_tokens",
    "lex",
    "token_texts",
    "NodeKind",
    "SourceLine",
    "Span",
    "SyntaxNode",
    "SyntaxUnit",
    "JavaParser",
    "parse",
    "parse_file",
    "nesting_depth",
    "outermost_unit",
    "unit_name",
]
