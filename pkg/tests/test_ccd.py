"""
Cognitive Complexity^D tests: the six rules in isolation and on decompiled fixtures
"""

import pytest

from dlens.cognitive import CcdConfig, cognitive_complexity, cognitive_complexity_d, rule_summary
from dlens.cognitive.sites import numeric_value
from dlens.errors import ConfigError
from dlens.frontend import parse

from conftest import load_unit, parse_body


def rule_ids(breakdown):
    return [increment.rule_id for increment in breakdown.rule_increments]


def test_unbraced_return_in_loop():
    breakdown = cognitive_complexity_d(load_unit("snippets/DigitOrLetter.java"))
    assert breakdown.base.file_total == 5
    assert rule_ids(breakdown) == ["R4"]
    assert breakdown.file_total == 9


def test_braced_loop_has_no_rule_increments():
    breakdown = cognitive_complexity_d(load_unit("snippets/DigitOrLetterBraced.java"))
    assert breakdown.rule_increments == []
    assert breakdown.file_total == 5


@pytest.mark.parametrize("relative, rule, amount", [
    ("snippets/MixedOperators.java", "R2", 3),
    ("snippets/LongLine.java", "R3", 1),
    ("snippets/OmittedBraces.java", "R4", 4),
    ("snippets/InlinedAssignment.java", "R5", 4),
    ("snippets/NumericLiteral.java", "R6", 1),
])
def test_single_rule_snippets(relative, rule, amount):
    unit = load_unit(relative)
    breakdown = cognitive_complexity_d(unit)
    assert [(i.rule_id, i.amount) for i in breakdown.rule_increments] == [(rule, amount)]
    assert breakdown.file_total == cognitive_complexity(unit).file_total + amount


def test_deep_nesting_rule():
    breakdown = cognitive_complexity_d(load_unit("snippets/DeepNesting.java"))
    assert breakdown.base.file_total == 10
    assert rule_ids(breakdown) == ["R1"]
    assert breakdown.rule_increments[0].span.start_line == 6
    assert breakdown.file_total == 13


def test_unbraced_if_without_else():
    breakdown = cognitive_complexity_d(parse_body("if (p) return;"))
    assert breakdown.base.file_total == 1
    assert breakdown.file_total == 5


def test_unbraced_else_and_loops():
    body = "if (p) { a = 1; } else a = b;\nfor (;;) a++;\nwhile (q) a--;\ndo a++; while (p);"
    breakdown = cognitive_complexity_d(parse_body(body))
    assert rule_ids(breakdown) == ["R4"] * 4


def test_else_if_is_not_an_unbraced_body():
    breakdown = cognitive_complexity_d(parse_body("if (p) { a = 1; } else if (q) { a = 2; }"))
    assert rule_ids(breakdown) == []


def test_conventional_operator_layering_is_free():
    breakdown = cognitive_complexity_d(parse_body("boolean r = a + b < b * a && p || a != b;"))
    assert "R2" not in rule_ids(breakdown)


def test_parentheses_end_operator_chain():
    breakdown = cognitive_complexity_d(parse_body("int r = (a + b) << (a & b);"))
    assert "R2" not in rule_ids(breakdown)


def test_statement_assignments_are_not_inlined():
    body = "a = b;\nfor (a = 0; a < b; a += 1) { b--; }\njava.util.function.IntUnaryOperator f = x -> a = x;"
    breakdown = cognitive_complexity_d(parse_body(body))
    assert "R5" not in rule_ids(breakdown)


def test_chained_assignment_is_inlined():
    breakdown = cognitive_complexity_d(parse_body("a = b = 0;"))
    assert rule_ids(breakdown) == ["R5"]


def test_exempt_numeric_literals():
    source = (
        "class T {\n"
        "  static final int LIMIT = 64;\n"
        "  @Retry(times = 5)\n"
        "  int m(int a) {\n"
        "    return a * -1 + 0 + 1 + LIMIT;\n"
        "  }\n"
        "}\n"
    )
    breakdown = cognitive_complexity_d(parse(source))
    assert "R6" not in rule_ids(breakdown)


def test_negative_literal_other_than_minus_one_counts():
    breakdown = cognitive_complexity_d(parse_body("a = -2;"))
    assert rule_ids(breakdown) == ["R6"]


@pytest.mark.parametrize("text, value", [
    ("42", 42),
    ("0x1F", 31),
    ("0b101L", 5),
    ("017", 15),
    ("1_000", 1000),
    ("2.5f", 2.5),
    ("1.6777216E7", 16777216.0),
    ("", None),
    ("0xZ", None),
])
def test_numeric_literal_values(text, value):
    assert numeric_value(text) == value


@pytest.mark.parametrize("mode, expected", [
    ("floor", 1),
    ("ratio", 146 / 120),
    ("fixed", 1),
])
def test_long_line_modes(mode, expected):
    config = CcdConfig(r3_mode=mode)
    breakdown = cognitive_complexity_d(load_unit("snippets/LongLine.java"), config)
    [increment] = breakdown.increments_for("R3")
    assert increment.amount == pytest.approx(expected)


def test_long_line_threshold_is_strict():
    unit = load_unit("snippets/LongLine.java")
    assert cognitive_complexity_d(unit, CcdConfig(r3_threshold=146)).increments_for("R3") == []
    assert len(cognitive_complexity_d(unit, CcdConfig(r3_threshold=145)).increments_for("R3")) == 1


def test_weights_are_configurable():
    breakdown = cognitive_complexity_d(load_unit("snippets/OmittedBraces.java"), CcdConfig(r4_weight=2))
    assert breakdown.file_total == 1 + 2


def test_invalid_config():
    with pytest.raises(ConfigError):
        CcdConfig(r3_mode="ceil")
    with pytest.raises(ConfigError):
        CcdConfig.from_dict({"r3_threshold": 0})


@pytest.mark.parametrize("original, decompiled, expected_original, expected_decompiled, rules", [
    ("original/KickCommand.java", "fernflower/KickCommand.java", 5, 8, []),
    ("original/EffectCommand.java", "fernflower/EffectCommand.java", 4, 10, ["R6"]),
    ("original/MyBitInputStream.java", "cfr/MyBitInputStream.java", 0, 6, ["R2", "R2"]),
    ("original/CircularFifoQueue.java", "cfr/CircularFifoQueue.java", 5, 7, ["R3"]),
    ("original/CharSequenceUtils.java", "cfr/CharSequenceUtils.java", 8, 16, ["R4", "R4"]),
    ("original/Soundex.java", "jadx/Soundex.java", 5, 7, ["R5"]),
    ("original/BlockIterator.java", "fernflower/BlockIterator.java", 0, 1, ["R6"]),
    ("original/DefaultIndenter.java", "jadx/DefaultIndenter.java", 3, 7, []),
])
def test_decompiled_pairs(original, decompiled, expected_original, expected_decompiled, rules):
    before = cognitive_complexity_d(load_unit(original))
    after = cognitive_complexity_d(load_unit(decompiled))
    assert before.file_total == expected_original
    assert after.file_total == expected_decompiled
    assert rule_ids(after) == rules
    assert after.file_total >= after.base.file_total


def test_rule_summary_lists_every_rule():
    summary = rule_summary(cognitive_complexity_d(load_unit("cfr/CharSequenceUtils.java")))
    assert list(summary) == ["R1", "R2", "R3", "R4", "R5", "R6"]
    assert summary["R4"] == {"count": 2, "amount": 8}
    assert summary["R1"] == {"count": 0, "amount": 0}
