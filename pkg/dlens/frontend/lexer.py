"""
Java Lexer

Splits Java source text into a comment-free token stream. The stream feeds
the n-gram language model, so every literal stays one token and whitespace
never joins or splits lexemes.
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional

from ..errors import LexError


class TokenKind(str, Enum):
    """Lexical categories of the Java 8 grammar"""
    IDENTIFIER = "identifier"
    KEYWORD = "keyword"
    OPERATOR = "operator"
    SEPARATOR = "separator"
    NUMERIC_LITERAL = "numeric-literal"
    STRING_LITERAL = "string-literal"
    CHAR_LITERAL = "char-literal"
    BOOLEAN_NULL_LITERAL = "boolean/null-literal"


@dataclass(frozen=True)
class Token:
    """One lexeme; `offset` is the character offset of its first character"""
    kind: TokenKind
    text: str
    line: int
    column: int = 1
    offset: int = 0


KEYWORDS = frozenset("""
    abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package
    private protected public return short static strictfp super switch
    synchronized this throw throws transient try void volatile while
""".split())

BOOLEAN_NULL = frozenset({"true", "false", "null"})

SEPARATORS = ["...", "::", "(", ")", "{", "}", "[", "]", ";", ",", ".", "@"]

OPERATORS = [
    ">>>=", "<<=", ">>=", ">>>", "->", "==", ">=", "<=", "!=", "&&", "||",
    "++", "--", "<<", ">>", "+=", "-=", "*=", "/=", "&=", "|=", "^=", "%=",
    "=", ">", "<", "!", "~", "?", ":", "+", "-", "*", "/", "&", "|", "^", "%",
]

_EXPONENT = r"[eE][+-]?\d[\d_]*"
_NUMBER = "|".join([
    # hexadecimal floating point needs a binary exponent
    r"0[xX](?:[0-9a-fA-F_]*\.[0-9a-fA-F_]+|[0-9a-fA-F_]+\.?)[pP][+-]?\d[\d_]*[fFdD]?",
    r"0[xX][0-9a-fA-F_]+[lL]?",
    r"0[bB][01_]+[lL]?",
    rf"\d[\d_]*\.[\d_]*(?:{_EXPONENT})?[fFdD]?",
    rf"\.\d[\d_]*(?:{_EXPONENT})?[fFdD]?",
    rf"\d[\d_]*{_EXPONENT}[fFdD]?",
    r"\d[\d_]*[fFdD]",
    r"\d[\d_]*[lL]?",
])

_TOKEN_SPECIFICATION = [
    ("WHITESPACE", r"[ \t\f\r\n]+"),
    ("LINE_COMMENT", r"//[^\r\n]*"),
    ("BLOCK_COMMENT", r"/\*[\s\S]*?\*/"),
    ("OPEN_COMMENT", r"/\*"),
    ("STRING", r'"(?:[^"\\\r\n]|\\.)*"'),
    ("OPEN_STRING", r'"'),
    ("CHAR", r"'(?:[^'\\\r\n]|\\.)+'"),
    ("OPEN_CHAR", r"'"),
    ("NUMBER", _NUMBER),
    ("WORD", r"(?:[^\W\d]|\$)(?:\w|\$)*"),
    ("SEPARATOR", "|".join(re.escape(s) for s in SEPARATORS)),
    ("OPERATOR", "|".join(re.escape(o) for o in OPERATORS)),
]

TOKEN_PATTERN = re.compile(
    "|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPECIFICATION)
)

_SKIPPED = {"WHITESPACE", "LINE_COMMENT", "BLOCK_COMMENT"}
_UNTERMINATED = {
    "OPEN_COMMENT": "unterminated block comment",
    "OPEN_STRING": "unterminated string literal",
    "OPEN_CHAR": "unterminated char literal",
}


def _word_kind(text: str) -> TokenKind:
    if text in BOOLEAN_NULL:
        return TokenKind.BOOLEAN_NULL_LITERAL
    if text in KEYWORDS:
        return TokenKind.KEYWORD
    return TokenKind.IDENTIFIER


_GROUP_KINDS = {
    "STRING": TokenKind.STRING_LITERAL,
    "CHAR": TokenKind.CHAR_LITERAL,
    "NUMBER": TokenKind.NUMERIC_LITERAL,
    "SEPARATOR": TokenKind.SEPARATOR,
    "OPERATOR": TokenKind.OPERATOR,
}


def iter_tokens(source: str, path: Optional[str] = None) -> Iterator[Token]:
    """
    Yield tokens of `source` lazily

    Args:
        source: Java source text
        path: File name used in error messages

    Raises:
        LexError: on unterminated literals/comments or a stray character
    """
    pos = 0
    line = 1
    line_start = 0
    length = len(source)

    while pos < length:
        match = TOKEN_PATTERN.match(source, pos)
        column = pos - line_start + 1
        if match is None:
            raise LexError(f"stray character {source[pos]!r}", line, column, path)

        group = match.lastgroup
        text = match.group()
        if group in _UNTERMINATED:
            raise LexError(_UNTERMINATED[group], line, column, path)

        if group not in _SKIPPED:
            kind = _word_kind(text) if group == "WORD" else _GROUP_KINDS[group]
            yield Token(kind=kind, text=text, line=line, column=column, offset=pos)

        newlines = text.count("\n")
        if newlines:
            line += newlines
            line_start = pos + text.rindex("\n") + 1
        pos = match.end()


def lex(source: str, path: Optional[str] = None) -> List[Token]:
    """Tokenize Java source into a comment-free list of tokens"""
    return list(iter_tokens(source, path))


def token_texts(source: str, path: Optional[str] = None) -> List[str]:
    """Lexeme texts only, the unit of the n-gram language model"""
    return [token.text for token in iter_tokens(source, path)]
