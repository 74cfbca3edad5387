"""
Perplexity Evaluator

Perplexity(S) = exp(-(1/n) * sum_i ln P(w_i | w_{i-order+1} .. w_{i-1}))
Lower values mean the token sequence is more natural to the model.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from loguru import logger

from ..errors import EmptyInput
from ..frontend.lexer import token_texts
from .model import NgramModel


@dataclass(frozen=True)
class PerplexityScore:
    value: float
    token_count: int

    def to_dict(self) -> dict:
        return {"value": self.value, "token_count": self.token_count}


def perplexity(model: NgramModel, tokens: Sequence[str]) -> PerplexityScore:
    """
    Perplexity of one token stream; out-of-vocabulary tokens score as <unk>

    Raises:
        EmptyInput: on an empty stream
    """
    if len(tokens) == 0:
        raise EmptyInput("cannot compute perplexity of an empty token stream")
    probabilities = np.fromiter(model.iter_conditionals(model.encode(tokens)), dtype=np.float64, count=len(tokens))
    value = float(np.exp(-np.mean(np.log(probabilities))))
    return PerplexityScore(value=value, token_count=len(tokens))


def score_file(model: NgramModel, source: str, path: Optional[str] = None) -> PerplexityScore:
    """Lex Java source (comments stripped) and score it"""
    return perplexity(model, token_texts(source, path))


class PerplexityEvaluator:
    """
    Scores many files against one trained model
    """

    def __init__(self, model: NgramModel):
        self.model = model

    def evaluate(self, source: str, path: Optional[str] = None) -> PerplexityScore:
        score = score_file(self.model, source, path)
        logger.debug(f"Perplexity of {path or '<source>'}: {score.value:.4f} over {score.token_count} tokens")
        return score
