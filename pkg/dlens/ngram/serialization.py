"""
Model File Format

Three UTF-8 lines:
  1. magic `DLENS-NGRAM`
  2. header JSON: format_version, order, smoothing constants, min_count
  3. body JSON: vocabulary, token count and count tables

All JSON is written with sorted keys and sorted tables, so identical models
produce identical bytes.
"""

import json
import os
from collections import Counter
from pathlib import Path
from typing import Any, Dict, List, Union

from loguru import logger

from ..errors import ConfigError, CorruptModel, VersionMismatch
from .model import BOS_ID, UNK, UNK_ID, NgramModel, SmoothingConfig

MAGIC = "DLENS-NGRAM"
FORMAT_VERSION = 1


def _dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def save(model: NgramModel) -> bytes:
    """Serialize a model deterministically"""
    header = {
        "format_version": FORMAT_VERSION,
        "order": model.order,
        "smoothing": model.smoothing.to_dict(),
        "min_count": model.min_count,
    }
    tables = []
    for table in model.counts:
        rows = [
            [list(context), sorted([token_id, count] for token_id, count in followers.items())]
            for context, followers in sorted(table.items())
        ]
        tables.append(rows)
    body = {
        "vocab": sorted([token, token_id] for token, token_id in model.vocab.items()),
        "token_count": model.token_count,
        "counts": tables,
    }
    return "\n".join([MAGIC, _dumps(header), _dumps(body)]).encode("utf-8") + b"\n"


def _is_id(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _check_vocab(pairs: List[List[Any]]) -> Dict[str, int]:
    vocab = {}
    for pair in pairs:
        if not isinstance(pair, list) or len(pair) != 2:
            raise CorruptModel("vocabulary entries must be [token, id] pairs")
        token, token_id = pair
        if not isinstance(token, str) or not isinstance(token_id, int):
            raise CorruptModel(f"bad vocabulary entry {pair!r}")
        vocab[token] = token_id
    if vocab.get(UNK) != UNK_ID:
        raise CorruptModel(f"vocabulary lacks {UNK} at id {UNK_ID}")
    if sorted(vocab.values()) != list(range(len(vocab))):
        raise CorruptModel("vocabulary ids are not contiguous")
    return vocab


def load(data: bytes) -> NgramModel:
    """
    Rebuild a model written by `save`

    Raises:
        VersionMismatch: written by another format version
        CorruptModel: truncated, bad magic or inconsistent tables
    """
    try:
        lines = data.decode("utf-8").split("\n")
    except UnicodeDecodeError as e:
        raise CorruptModel(f"model file is not UTF-8: {e}") from e
    if not lines or lines[0] != MAGIC:
        raise CorruptModel("missing model file magic")
    if len(lines) < 3:
        raise CorruptModel("model file is truncated")

    try:
        header = json.loads(lines[1])
    except json.JSONDecodeError as e:
        raise CorruptModel(f"bad model header: {e}") from e
    if not isinstance(header, dict):
        raise CorruptModel("bad model header")
    version = header.get("format_version")
    if version != FORMAT_VERSION:
        raise VersionMismatch(f"model format version {version!r}, expected {FORMAT_VERSION}")

    try:
        body = json.loads(lines[2])
    except json.JSONDecodeError as e:
        raise CorruptModel(f"bad model body: {e}") from e

    try:
        order = int(header["order"])
        smoothing = SmoothingConfig(**header["smoothing"])
        min_count = int(header["min_count"])
        vocab = _check_vocab(body["vocab"])
        token_count = int(body["token_count"])
        raw_tables = body["counts"]
    except (KeyError, TypeError, ValueError, ConfigError) as e:
        raise CorruptModel(f"incomplete model file: {e}") from e

    if order < 1 or len(raw_tables) != order:
        raise CorruptModel(f"model declares order {order} but holds {len(raw_tables)} count tables")

    size = len(vocab)
    counts = []
    try:
        for m, rows in enumerate(raw_tables, start=1):
            table = {}
            for context, followers in rows:
                context = tuple(context)
                if len(context) != m - 1 or any(not _is_id(t) or not BOS_ID <= t < size for t in context):
                    raise CorruptModel(f"bad order-{m} context {list(context)!r}")
                counter = Counter()
                for token_id, count in followers:
                    if not _is_id(token_id) or not _is_id(count) or not 0 <= token_id < size or count <= 0:
                        raise CorruptModel(f"bad count entry [{token_id}, {count}]")
                    counter[token_id] = count
                table[context] = counter
            counts.append(table)
    except (TypeError, ValueError) as e:
        raise CorruptModel(f"malformed count tables: {e}") from e

    return NgramModel(
        order=order,
        vocab=vocab,
        counts=counts,
        smoothing=smoothing,
        min_count=min_count,
        token_count=token_count,
    )


def save_model(model: NgramModel, path: Union[str, Path]) -> Path:
    path = Path(path)
    if path.parent and not path.parent.exists():
        os.makedirs(path.parent, exist_ok=True)
    path.write_bytes(save(model))
    logger.info(f"Model saved to {path}")
    return path


def load_model(path: Union[str, Path]) -> NgramModel:
    model = load(Path(path).read_bytes())
    logger.debug(f"Loaded {model.order}-gram model from {path}")
    return model
