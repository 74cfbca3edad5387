"""
Base Cognitive Complexity tests
"""

import pytest

from dlens.cognitive import cognitive_complexity

from conftest import load_unit, parse_body


def reasons(breakdown):
    return [(increment.reason, increment.amount) for increment in breakdown.per_increment]


def test_digit_or_letter_increments():
    breakdown = cognitive_complexity(load_unit("snippets/DigitOrLetter.java"))
    assert breakdown.file_total == 5
    assert reasons(breakdown) == [
        ("enhanced-for", 1),
        ("if", 2),
        ("logical-sequence &&", 1),
        ("logical-sequence ||", 1),
    ]
    assert breakdown.method_total("DigitOrLetter.containsDigitOrLetter") == 5


def test_braces_do_not_change_base_score():
    assert cognitive_complexity(load_unit("snippets/DigitOrLetterBraced.java")).file_total == 5


@pytest.mark.parametrize("relative, expected", [
    ("original/KickCommand.java", 5),
    ("fernflower/KickCommand.java", 8),
    ("original/EffectCommand.java", 4),
    ("fernflower/EffectCommand.java", 9),
    ("original/MyBitInputStream.java", 0),
    ("cfr/MyBitInputStream.java", 0),
    ("original/CircularFifoQueue.java", 5),
    ("cfr/CircularFifoQueue.java", 6),
    ("original/CharSequenceUtils.java", 8),
    ("cfr/CharSequenceUtils.java", 8),
    ("original/Soundex.java", 5),
    ("jadx/Soundex.java", 3),
    ("original/DefaultIndenter.java", 3),
    ("jadx/DefaultIndenter.java", 7),
    ("snippets/DeepNesting.java", 10),
    ("snippets/Switches.java", 12),
])
def test_fixture_totals(relative, expected):
    assert cognitive_complexity(load_unit(relative)).file_total == expected


def test_empty_class_scores_zero():
    breakdown = cognitive_complexity(load_unit("snippets/Empty.java"))
    assert breakdown.file_total == 0
    assert breakdown.methods == []


def test_straight_line_method_scores_zero():
    breakdown = cognitive_complexity(parse_body("a = b + 1;\nSystem.out.println(a);"))
    assert breakdown.file_total == 0
    assert breakdown.method_totals == {"T.m": 0}


def test_switch_ternary_catch_and_labels():
    breakdown = cognitive_complexity(load_unit("snippets/Switches.java"))
    assert breakdown.method_total("Switches.classify") == 3
    assert breakdown.method_total("Switches.search") == 9
    assert ("labeled-break", 1) in reasons(breakdown)
    assert ("catch", 1) in reasons(breakdown)


def test_else_chain():
    breakdown = cognitive_complexity(parse_body("if (p) { a = 1; } else if (q) { a = 2; } else { a = 3; }"))
    assert reasons(breakdown) == [("if", 1), ("else-if", 1), ("else", 1)]


def test_mixed_logical_sequence_counts_each_change():
    breakdown = cognitive_complexity(parse_body("if (p && q || a > b && p) { a = 1; }"))
    assert breakdown.file_total == 1 + 3


def test_same_operator_sequence_counts_once():
    breakdown = cognitive_complexity(parse_body("boolean r = p && q && (a > b) && p;"))
    assert breakdown.file_total == 1


def test_negation_starts_new_sequence():
    breakdown = cognitive_complexity(parse_body("boolean r = p && !(q && a > b);"))
    assert breakdown.file_total == 2


def test_unlabeled_break_is_free():
    breakdown = cognitive_complexity(parse_body("while (p) {\n  break;\n}"))
    assert breakdown.file_total == 1


def test_lambda_nesting_is_charged():
    breakdown = cognitive_complexity(parse_body("Runnable r = () -> {\n  if (p) { a = 1; }\n};"))
    assert breakdown.file_total == 2


def test_method_totals_sum_to_file_total():
    breakdown = cognitive_complexity(load_unit("original/EffectCommand.java"))
    assert sum(breakdown.method_totals.values()) == breakdown.file_total
    assert all(increment.amount >= 1 for increment in breakdown.per_increment)
