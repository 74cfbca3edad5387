"""
N-gram language model and perplexity tests

The probability oracle below recounts n-grams from the raw token lists and
applies the interpolated add-k formula directly.
"""

import math

import pytest

from dlens.errors import ConfigError, CorruptModel, EmptyCorpus, EmptyInput, VersionMismatch
from dlens.ngram import (
    BOS,
    UNK,
    PerplexityEvaluator,
    SmoothingConfig,
    load,
    load_model,
    perplexity,
    save,
    save_model,
    score_file,
    train,
)

from conftest import fixture_path

CORPUS = [
    ["a", "b", "a", "b", "c"],
    ["b", "c", "a", "a", "b"],
    ["c", "a", "b"],
]


def oracle_probability(corpus, order, k, beta, token, context):
    """Interpolated add-k estimate recomputed from scratch (min_count 1)"""
    vocabulary = {UNK} | {t for stream in corpus for t in stream}
    size = len(vocabulary)
    word = token if token in vocabulary else UNK
    history = [BOS] * (order - 1) + list(context)
    history = history[len(history) - (order - 1):] if order > 1 else []

    positions = []
    for stream in corpus:
        padded = [BOS] * (order - 1) + list(stream)
        for i in range(order - 1, len(padded)):
            positions.append((padded[:i], padded[i]))

    probability = 1.0 / size
    for m in range(1, order + 1):
        h = history[len(history) - (m - 1):] if m > 1 else []
        following = [w for prefix, w in positions if (prefix[len(prefix) - (m - 1):] if m > 1 else []) == h]
        total = len(following)
        if total == 0:
            continue
        lam = total / (total + beta)
        probability = lam * (following.count(word) + k) / (total + k * size) + (1 - lam) * probability
    return probability


# -------------------------------------------------------------- training

def test_bigram_counts():
    model = train([["a", "b", "a", "b"]], order=2, min_count=1)
    assert model.count(["a"], "b") == 2
    assert model.count(["b"], "a") == 1
    assert model.count([BOS], "a") == 1


@pytest.mark.parametrize("order", [1, 2, 3, 4])
def test_probabilities_match_oracle(order):
    smoothing = SmoothingConfig(k=0.01, beta=1.0)
    model = train(CORPUS, order=order, smoothing=smoothing, min_count=1)
    contexts = [[], ["a"], ["b", "a"], ["c", "a", "b"], ["z", "a"], [BOS, BOS, "c"]]
    for context in contexts:
        for token in ["a", "b", "c", "z"]:
            expected = oracle_probability(CORPUS, order, 0.01, 1.0, token, context)
            assert model.conditional_probability(token, context) == pytest.approx(expected, abs=1e-9)


@pytest.mark.parametrize("order", [1, 2, 5])
def test_perplexity_matches_oracle(order):
    model = train(CORPUS, order=order, min_count=1)
    query = ["a", "b", "c", "z", "a"]
    logs = [
        math.log(oracle_probability(CORPUS, order, 0.01, 1.0, token, query[:i]))
        for i, token in enumerate(query)
    ]
    expected = math.exp(-sum(logs) / len(logs))
    assert perplexity(model, query).value == pytest.approx(expected, rel=1e-9)


@pytest.mark.parametrize("order", [1, 2, 3])
def test_conditionals_sum_to_one(order):
    model = train(CORPUS, order=order, min_count=1)
    for context in ([], ["a"], ["b", "c"], ["never", "seen"]):
        total = sum(model.conditional_probability(token, context) for token in model.vocab)
        assert total == pytest.approx(1.0, abs=1e-9)


def test_repeated_token_unigram():
    model = train([["x"] * 50], order=1, min_count=1)
    assert model.conditional_probability("x") > 0.95
    assert model.conditional_probability("x") + model.conditional_probability(UNK) == pytest.approx(1.0)


@pytest.mark.parametrize("order", [2, 3])
def test_doubled_corpus_keeps_top_order_ratios(order):
    single = train(CORPUS, order=order, min_count=1)
    doubled = train(CORPUS + CORPUS, order=order, min_count=1)
    assert doubled.vocab == single.vocab
    top, top_doubled = single.counts[-1], doubled.counts[-1]
    assert set(top_doubled) == set(top)
    for context, followers in top.items():
        total = sum(followers.values())
        total_doubled = sum(top_doubled[context].values())
        assert total_doubled == 2 * total
        for token_id, count in followers.items():
            assert top_doubled[context][token_id] / total_doubled == count / total


def test_training_is_order_independent():
    forward = train(CORPUS, order=3, min_count=1)
    backward = train(list(reversed(CORPUS)), order=3, min_count=1)
    assert save(forward) == save(backward)


def test_rare_tokens_become_unknown():
    model = train(CORPUS + [["rare"]], order=2, min_count=2)
    assert "rare" not in model.vocab
    assert model.token_id("rare") == model.token_id("never-seen")


def test_training_errors():
    with pytest.raises(EmptyCorpus):
        train([[], []], order=3)
    with pytest.raises(ConfigError):
        train(CORPUS, order=0)
    with pytest.raises(ConfigError):
        train(CORPUS, min_count=0)
    with pytest.raises(ConfigError):
        SmoothingConfig(k=0)


# ------------------------------------------------------------ perplexity

def test_uniform_model_perplexity():
    corpus = [["a", "b", "c", "a", "b", "c", "x", "y"]]
    model = train(corpus, order=1, min_count=2)
    assert model.vocab_size == 4
    for query in (["a"], ["c", "b", "q"], ["y", "y", "a", "b"]):
        assert perplexity(model, query).value == pytest.approx(4.0, abs=1e-9)


def test_single_entry_vocabulary_perplexity():
    model = train([["a", "b"]], order=2, min_count=5)
    assert model.vocab_size == 1
    assert perplexity(model, ["a", "b", "c"]).value == pytest.approx(1.0, abs=1e-12)


def test_bigram_closed_form():
    k, beta, size = 0.01, 1.0, 3
    model = train([["a", "b", "a", "b"]], order=2, smoothing=SmoothingConfig(k=k, beta=beta), min_count=1)

    # unigram level: a and b each seen twice out of four tokens
    unigram = 4 / (4 + beta) * (2 + k) / (4 + k * size) + beta / (4 + beta) / size
    # "a" after the start marker (seen once), then "b" after "a" (seen twice)
    first = 1 / (1 + beta) * (1 + k) / (1 + k * size) + beta / (1 + beta) * unigram
    second = 2 / (2 + beta) * (2 + k) / (2 + k * size) + beta / (2 + beta) * unigram
    expected = math.exp(-(math.log(first) + math.log(second)) / 2)

    score = perplexity(model, ["a", "b"])
    assert score.value == pytest.approx(expected, abs=1e-9)
    assert score.token_count == 2


def test_empty_stream():
    model = train(CORPUS, order=2, min_count=1)
    with pytest.raises(EmptyInput):
        perplexity(model, [])


def test_score_file_ignores_comments():
    model = train(CORPUS, order=2, min_count=1)
    plain = score_file(model, "int x = 1;")
    commented = score_file(model, "/* header */ int x = 1; // trailing")
    assert plain.value == pytest.approx(commented.value)
    assert plain.token_count == 5


def test_evaluator_matches_score_file():
    source = fixture_path("original/KickCommand.java").read_text(encoding="utf-8")
    model = train([source.split()], order=3, min_count=1)
    score = PerplexityEvaluator(model).evaluate("return x;", "b.java")
    assert score == score_file(model, "return x;")
    assert score.token_count == 3


# --------------------------------------------------------- serialization

def test_save_is_deterministic_and_loadable(tmp_path):
    model = train(CORPUS, order=3, min_count=1)
    data = save(model)
    assert data == save(model)

    restored = load(data)
    assert save(restored) == data
    for context in ([], ["a"], ["b", "c"]):
        assert restored.conditional_probability("a", context) == model.conditional_probability("a", context)

    path = save_model(model, tmp_path / "models" / "java.lm")
    assert path.read_bytes() == data
    assert load_model(path).statistics() == model.statistics()


def test_load_rejects_other_versions():
    data = save(train(CORPUS, order=2, min_count=1))
    with pytest.raises(VersionMismatch):
        load(data.replace(b'"format_version":1', b'"format_version":2'))


@pytest.mark.parametrize("mangle", [
    lambda data: b"NOT-A-MODEL" + data[11:],
    lambda data: data.split(b"\n")[0] + b"\n" + data.split(b"\n")[1],
    lambda data: data.replace(b'"order":2', b'"order":5'),
    lambda data: data[:-40],
    lambda data: b"\xff\xfe" + data,
    lambda data: data.replace(b"[[-1],", b"[[-1.0],", 1),
    lambda data: data.replace(b"[],[[1,", b"[],[[1.0,", 1),
])
def test_load_rejects_corrupt_files(mangle):
    data = save(train(CORPUS, order=2, min_count=1))
    with pytest.raises(CorruptModel):
        load(mangle(data))


def test_log_prob_matches_probability():
    model = train(CORPUS, order=2, min_count=1)
    assert model.log_prob("b", ["a"]) == pytest.approx(math.log(model.conditional_probability("b", ["a"])))
