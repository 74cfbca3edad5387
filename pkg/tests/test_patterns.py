"""
Decompiler pattern detection tests
"""

import pytest

from dlens.cognitive import (
    PATTERN_IDS,
    CognitiveAnalyzer,
    PatternChecker,
    RuleCatalog,
    cognitive_complexity_d,
    detect_patterns,
)

from conftest import load_unit


GOLDEN = [
    ("original/KickCommand.java", []),
    ("fernflower/KickCommand.java", ["P1"]),
    ("original/EffectCommand.java", []),
    ("fernflower/EffectCommand.java", ["P1", "P6"]),
    ("original/MyBitInputStream.java", []),
    ("cfr/MyBitInputStream.java", ["P2"]),
    ("original/CircularFifoQueue.java", []),
    ("cfr/CircularFifoQueue.java", ["P3"]),
    ("original/CharSequenceUtils.java", []),
    ("cfr/CharSequenceUtils.java", ["P4"]),
    ("original/Soundex.java", []),
    ("jadx/Soundex.java", ["P5"]),
    ("original/BlockIterator.java", []),
    ("fernflower/BlockIterator.java", ["P6"]),
    ("original/DefaultIndenter.java", []),
    ("jadx/DefaultIndenter.java", ["P1"]),
]


@pytest.mark.parametrize("relative, expected", GOLDEN)
def test_golden_patterns(relative, expected):
    assert detect_patterns(load_unit(relative)).present == expected


@pytest.mark.parametrize("relative", [relative for relative, _ in GOLDEN])
def test_patterns_agree_with_rule_sites(relative):
    unit = load_unit(relative)
    report = detect_patterns(unit)
    breakdown = cognitive_complexity_d(unit)
    catalog = RuleCatalog()
    for pattern_id in PATTERN_IDS[1:]:
        rule_id = catalog.rule_for(pattern_id)
        pattern_spans = [location.span for location in report.per_pattern[pattern_id]]
        rule_spans = [increment.span for increment in breakdown.increments_for(rule_id)]
        assert sorted(pattern_spans) == sorted(rule_spans), pattern_id


def test_omitted_braces_counted_per_body():
    report = detect_patterns(load_unit("cfr/CharSequenceUtils.java"))
    assert report.count("P4") == 2
    assert [location.span.start_line for location in report.per_pattern["P4"]] == [12, 17]


def test_deep_nesting_depth_threshold():
    unit = load_unit("snippets/DeepNesting.java")
    assert detect_patterns(unit).count("P1") == 2
    assert PatternChecker({"p1_min_depth": 4}).check(unit).count("P1") == 1
    assert PatternChecker({"p1_min_depth": 5}).check(unit).present == []


def test_else_if_chain_is_one_level():
    unit = load_unit("fernflower/EffectCommand.java")
    [location] = detect_patterns(unit).per_pattern["P1"]
    assert "depth 3" in location.detail


def test_disabled_check():
    checker = PatternChecker({"checks": {"P6": False}})
    assert checker.check(load_unit("fernflower/EffectCommand.java")).present == ["P1"]


def test_report_lists_every_pattern():
    payload = detect_patterns(load_unit("snippets/Empty.java")).to_dict()
    assert payload["present"] == []
    assert payload["counts"] == {f"P{i}": 0 for i in range(1, 7)}


def test_pattern_statistics():
    analyzer = CognitiveAnalyzer()
    present = [
        analyzer.analyze(load_unit(relative))["patterns"].present
        for relative, _ in GOLDEN if not relative.startswith("original/")
    ]
    statistics = analyzer.get_pattern_statistics(present)
    assert statistics["total_files"] == 8
    assert statistics["files_with_any_pattern"] == 8
    assert statistics["files_with_pattern"] == {"P1": 3, "P2": 1, "P3": 1, "P4": 1, "P5": 1, "P6": 2}


def test_analyzer_shares_long_line_threshold():
    analyzer = CognitiveAnalyzer({"ccd": {"r3_threshold": 200}})
    result = analyzer.analyze(load_unit("cfr/CircularFifoQueue.java"))
    assert result["patterns"].present == []
    assert result["ccd"].file_total == 6


def test_catalog_pairs_rules_with_patterns():
    catalog = RuleCatalog()
    assert [catalog.rule_for(pattern_id) for pattern_id in PATTERN_IDS] == ["R1", "R2", "R3", "R4", "R5", "R6"]
    assert catalog.get_rule("R4").paired_with == "P4"
    assert catalog.get_rule("P9") is None
