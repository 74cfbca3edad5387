"""
N-gram Perplexity Module

Token-level language model of Java code and the perplexity metric built on it.
"""

from .model import BOS, UNK, NgramModel, SmoothingConfig, build_vocab, train
from .perplexity import PerplexityEvaluator, PerplexityScore, perplexity, score_file
from .serialization import FORMAT_VERSION, MAGIC, load, load_model, save, save_model

__all__ = [
    "BOS",
    "UNK",
    "NgramModel",
    "SmoothingConfig",
    "build_vocab",
    "train",
    "PerplexityEvaluator",
    "PerplexityScore",
    "perplexity",
    "score_file",
    "FORMAT_VERSION",
    "MAGIC",
    "load",
    "load_model",
    "save",
    "save_model",
]
