"""
Syntax frontend tests: lexing, parsing and nesting depth
"""

import dataclasses

import pytest

from dlens.errors import LexError, ParseError
from dlens.frontend import NodeKind, TokenKind, lex, nesting_depth, parse, token_texts
from dlens.frontend.nodes import BRACED_BODY_KINDS, OPERATOR_KINDS

from conftest import fixture_path, load_unit, parse_body


# ----------------------------------------------------------------- lexer

def test_lex_return_statement():
    tokens = lex("return 0;")
    assert [(t.kind, t.text) for t in tokens] == [
        (TokenKind.KEYWORD, "return"),
        (TokenKind.NUMERIC_LITERAL, "0"),
        (TokenKind.SEPARATOR, ";"),
    ]


def test_lex_shift_declaration():
    tokens = lex("int x = 1 << 24;")
    assert [t.text for t in tokens] == ["int", "x", "=", "1", "<<", "24", ";"]
    assert {t.text for t in tokens if t.kind is TokenKind.OPERATOR} == {"=", "<<"}


def test_lex_drops_comments():
    tokens = lex("// note\nx=1;")
    assert [t.text for t in tokens] == ["x", "=", "1", ";"]
    assert (tokens[0].line, tokens[0].column) == (2, 1)


def test_lex_block_comment_and_literals():
    source = 'String s = "a/*b*/c"; /* gone */ char q = \'"\'; boolean f = false; Object o = null;'
    texts = token_texts(source)
    assert '"a/*b*/c"' in texts
    assert "gone" not in texts
    kinds = {t.text: t.kind for t in lex(source)}
    assert kinds["'\"'"] is TokenKind.CHAR_LITERAL
    assert kinds["false"] is TokenKind.BOOLEAN_NULL_LITERAL
    assert kinds["null"] is TokenKind.BOOLEAN_NULL_LITERAL


@pytest.mark.parametrize("literal", ["0x1F", "1_000L", "1.6777216E7", ".5f", "0b1010", "3e-2d"])
def test_lex_numeric_literal_forms(literal):
    tokens = lex(f"x = {literal};")
    assert tokens[2].kind is TokenKind.NUMERIC_LITERAL
    assert tokens[2].text == literal


def test_lex_offsets_reconstruct_source():
    text = fixture_path("jadx/Soundex.java").read_text(encoding="utf-8")
    for token in lex(text):
        assert text[token.offset:token.offset + len(token.text)] == token.text


@pytest.mark.parametrize("source, line", [
    ('String s = "open;', 1),
    ("int a;\nchar c = 'x;", 2),
    ("int a = 1; /* never closed", 1),
    ("int a = 1 # 2;", 1),
])
def test_lex_errors(source, line):
    with pytest.raises(LexError) as info:
        lex(source)
    assert info.value.line == line


# ---------------------------------------------------------------- parser

def test_parse_loop_with_condition():
    unit = load_unit("snippets/DigitOrLetter.java")
    assert len(unit.methods()) == 1
    assert len(list(unit.nodes_of(NodeKind.ENHANCED_FOR))) == 1
    assert len(list(unit.nodes_of(NodeKind.IF))) == 1
    operators = {node.operator for node in unit.nodes_of(NodeKind.BINARY)}
    assert {"&&", "||"} <= operators


def test_parse_empty_class():
    unit = parse("class A {}")
    assert unit.methods() == ()


def test_parse_error_reports_offending_line():
    source = "class A {\n  void f() {\n    int x = ;\n  }\n}\n"
    with pytest.raises(ParseError) as info:
        parse(source, "A.java")
    assert info.value.line == 3
    assert info.value.path == "A.java"


def test_parse_unbalanced_brace():
    with pytest.raises(ParseError):
        parse("class A {\n  void f() {\n    if (true) {\n  }\n")


def test_spans_nest_within_parents():
    unit = load_unit("fernflower/KickCommand.java")
    for node in unit.walk():
        if node.parent is not None:
            assert node.parent.span.contains(node.span), node


def test_operator_and_braces_fields():
    unit = load_unit("snippets/Switches.java")
    for node in unit.walk():
        assert (node.operator is not None) == (node.kind in OPERATOR_KINDS)
        if node.has_braces is not None:
            assert node.parent.kind in BRACED_BODY_KINDS
            assert node.role in ("consequence", "alternative", "body")


def test_has_braces_on_bodies():
    unit = load_unit("snippets/DigitOrLetter.java")
    loop = next(unit.nodes_of(NodeKind.ENHANCED_FOR))
    branch = next(unit.nodes_of(NodeKind.IF))
    assert loop.child("body").has_braces is True
    assert branch.child("consequence").has_braces is False


def test_else_if_has_no_brace_flag():
    unit = parse_body("if (p) { a = 1; } else if (q) { a = 2; } else a = 3;")
    _, second = list(unit.nodes_of(NodeKind.IF))
    assert second.is_else_if
    assert second.has_braces is None
    assert second.child("alternative").has_braces is False


def test_comments_do_not_reach_tree():
    unit = parse("class A {\n  // line\n  /* block */\n  void f() { /** doc */ }\n}\n")
    assert all("comment" not in node.grammar_type for node in unit.walk())


def test_tree_is_immutable():
    unit = parse("class A {}")
    with pytest.raises(dataclasses.FrozenInstanceError):
        unit.root.kind = NodeKind.OTHER


def test_source_lines_keep_raw_text():
    unit = load_unit("snippets/LongLine.java")
    assert unit.source_lines[2].length == 146


# --------------------------------------------------------------- nesting

def test_nesting_inside_loop():
    unit = load_unit("snippets/DigitOrLetter.java")
    assert nesting_depth(next(unit.nodes_of(NodeKind.IF))) == 1


def test_nesting_top_level_if():
    unit = parse_body("if (p) { a = 1; }")
    assert nesting_depth(next(unit.nodes_of(NodeKind.IF))) == 0


def test_nesting_of_if_chain():
    unit = parse_body("if (p) {\n if (q) {\n  if (a > b) { a = b; }\n }\n}")
    depths = [nesting_depth(node) for node in unit.nodes_of(NodeKind.IF)]
    assert depths == [0, 1, 2]


def test_else_if_keeps_chain_level():
    unit = parse_body("if (p) { a = 1; } else if (q) { a = 2; } else { if (p) { a = 3; } }")
    depths = [nesting_depth(node) for node in unit.nodes_of(NodeKind.IF)]
    assert depths == [0, 0, 1]


def test_try_does_not_nest_but_catch_does():
    unit = parse_body("try {\n if (p) { a = 1; }\n} catch (RuntimeException e) {\n if (q) { a = 2; }\n}")
    depths = [nesting_depth(node) for node in unit.nodes_of(NodeKind.IF)]
    assert depths == [0, 1]


def test_lambda_body_nests():
    unit = parse_body("Runnable r = () -> {\n if (p) { a = 1; }\n};")
    assert nesting_depth(next(unit.nodes_of(NodeKind.IF))) == 1
