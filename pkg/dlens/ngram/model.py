"""
N-gram Language Model

Order-n token model with interpolated add-k smoothing. For a token w after
context h (the last n-1 tokens, left-padded with begin-of-sequence markers):

    P_0(w)   = 1 / V
    P_m(w|h) = lam * (c(h_m, w) + k) / (c(h_m) + k * V) + (1 - lam) * P_{m-1}(w|h)
               with lam = c(h_m) / (c(h_m) + beta), for m = 1..n
    P_m      = P_{m-1} when the order-m context h_m (last m-1 tokens) was never seen

V counts the vocabulary including <unk>; c(h_m) is the number of times h_m
preceded any token in training. Each step mixes two distributions, so the
conditionals of every context sum to one.
"""

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from ..errors import ConfigError, EmptyCorpus

UNK = "<unk>"
UNK_ID = 0
BOS = "<s>"
BOS_ID = -1

Context = Tuple[int, ...]


@dataclass(frozen=True)
class SmoothingConfig:
    """Smoothing method tag and constants"""
    method: str = "interpolated-add-k"
    k: float = 0.01
    beta: float = 1.0

    def __post_init__(self):
        if self.method != "interpolated-add-k":
            raise ConfigError(f"unsupported smoothing method {self.method!r}")
        if self.k <= 0:
            raise ConfigError(f"smoothing k must be positive, got {self.k}")
        if self.beta <= 0:
            raise ConfigError(f"smoothing beta must be positive, got {self.beta}")

    def to_dict(self) -> dict:
        return {"method": self.method, "k": self.k, "beta": self.beta}


@dataclass
class NgramModel:
    """
    Count tables for orders 1..n

    counts[m - 1][h][w] is the number of times token id w followed the
    (m - 1)-token context h in training.
    """
    order: int
    vocab: Dict[str, int]
    counts: List[Dict[Context, Counter]]
    smoothing: SmoothingConfig = field(default_factory=SmoothingConfig)
    min_count: int = 2
    token_count: int = 0

    def __post_init__(self):
        self._context_totals: List[Dict[Context, int]] = [
            {context: sum(followers.values()) for context, followers in table.items()}
            for table in self.counts
        ]

    @property
    def vocab_size(self) -> int:
        return len(self.vocab)

    def token_id(self, token: str) -> int:
        return self.vocab.get(token, UNK_ID)

    def encode(self, tokens: Iterable[str]) -> List[int]:
        return [self.token_id(token) for token in tokens]

    def _context_ids(self, context: Sequence[str]) -> Context:
        ids = [BOS_ID if token == BOS else self.token_id(token) for token in context]
        width = self.order - 1
        padded = [BOS_ID] * max(0, width - len(ids)) + ids
        return tuple(padded[len(padded) - width:]) if width else ()

    def count(self, context: Sequence[str], token: str) -> int:
        """Training count of `token` right after `context` (len(context) < order)"""
        table = self.counts[len(context)]
        ids = tuple(BOS_ID if t == BOS else self.token_id(t) for t in context)
        return table.get(ids, Counter()).get(self.token_id(token), 0)

    def context_total(self, m: int, context: Context) -> int:
        return self._context_totals[m - 1].get(context, 0)

    def probability_by_id(self, token_id: int, context: Context) -> float:
        """Smoothed P(token | context); `context` holds exactly order-1 ids"""
        size = self.vocab_size
        k = self.smoothing.k
        beta = self.smoothing.beta
        probability = 1.0 / size
        for m in range(1, self.order + 1):
            history = context[len(context) - (m - 1):] if m > 1 else ()
            total = self._context_totals[m - 1].get(history, 0)
            if total == 0:
                continue
            followed = self.counts[m - 1][history].get(token_id, 0)
            lam = total / (total + beta)
            probability = lam * (followed + k) / (total + k * size) + (1.0 - lam) * probability
        return probability

    def conditional_probability(self, token: str, context: Sequence[str] = ()) -> float:
        """Smoothed P(token | context) for text tokens; short contexts are BOS-padded"""
        return self.probability_by_id(self.token_id(token), self._context_ids(context))

    def log_prob(self, token: str, context: Sequence[str] = ()) -> float:
        return math.log(self.conditional_probability(token, context))

    def iter_conditionals(self, ids: Sequence[int]) -> Iterable[float]:
        """Conditional probability of every position of an encoded sequence"""
        width = self.order - 1
        padded = [BOS_ID] * width + list(ids)
        for i in range(width, len(padded)):
            yield self.probability_by_id(padded[i], tuple(padded[i - width:i]))

    def statistics(self) -> Dict[str, int]:
        return {
            "order": self.order,
            "vocab_size": self.vocab_size,
            "token_count": self.token_count,
            "contexts": sum(len(table) for table in self.counts),
        }


def build_vocab(corpus: Sequence[Sequence[str]], min_count: int) -> Dict[str, int]:
    """Tokens seen at least `min_count` times get ids 1.. in sorted order"""
    frequencies = Counter()
    for stream in corpus:
        frequencies.update(stream)
    known = sorted(token for token, freq in frequencies.items() if freq >= min_count and token != UNK)
    vocab = {UNK: UNK_ID}
    for index, token in enumerate(known, start=1):
        vocab[token] = index
    return vocab


def train(
    corpus: Sequence[Sequence[str]],
    order: int = 5,
    smoothing: Optional[SmoothingConfig] = None,
    min_count: int = 2,
) -> NgramModel:
    """
    Count n-grams of every order over a corpus of token streams

    Each stream is one sequence with order-1 begin markers on the left; no
    context crosses stream boundaries.

    Raises:
        EmptyCorpus: when no stream holds a token
        ConfigError: on order < 1 or min_count < 1
    """
    if order < 1:
        raise ConfigError(f"order must be at least 1, got {order}")
    if min_count < 1:
        raise ConfigError(f"min_count must be at least 1, got {min_count}")
    token_count = sum(len(stream) for stream in corpus)
    if token_count == 0:
        raise EmptyCorpus("training corpus holds no tokens")

    smoothing = smoothing or SmoothingConfig()
    vocab = build_vocab(corpus, min_count)
    counts: List[Dict[Context, Counter]] = [defaultdict(Counter) for _ in range(order)]
    width = order - 1

    for stream in corpus:
        padded = [BOS_ID] * width + [vocab.get(token, UNK_ID) for token in stream]
        for i in range(width, len(padded)):
            token_id = padded[i]
            for m in range(1, order + 1):
                counts[m - 1][tuple(padded[i - m + 1:i])][token_id] += 1

    model = NgramModel(
        order=order,
        vocab=vocab,
        counts=[dict(table) for table in counts],
        smoothing=smoothing,
        min_count=min_count,
        token_count=token_count,
    )
    logger.info(
        f"Trained {order}-gram model: {model.vocab_size} vocab entries, {token_count} tokens, "
        f"{len(corpus)} sequences"
    )
    return model
