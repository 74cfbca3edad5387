import json
import os
from decimal import ROUND_HALF_UP, Decimal
from typing import Any, Dict, List, Optional, Union

import jsonlines
import pandas as pd
from loguru import logger


def _ensure_parent(path: str) -> None:
    dir_path = os.path.dirname(path)
    if dir_path and not os.path.exists(dir_path):
        os.makedirs(dir_path)


def dumps_sorted(data: Any) -> str:
    """Deterministic JSON text (sorted keys, UTF-8 kept)"""
    return json.dumps(data, sort_keys=True, ensure_ascii=False)


def round_half_away(value: Optional[float], decimals: int = 2) -> Optional[float]:
    """Round half away from zero: 0.125 -> 0.13, -0.125 -> -0.13"""
    if value is None:
        return None
    quantum = Decimal(1).scaleb(-decimals)
    # repr keeps the shortest decimal form of the float
    return float(Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP))


def write_jsonl(rows: List[Dict[str, Any]], stream) -> None:
    """Write rows as JSON Lines to an open text stream"""
    writer = jsonlines.Writer(stream, dumps=dumps_sorted, flush=True)
    writer.write_all(rows)


def save_jsonl(data: Union[Dict[str, Any], List[Dict[str, Any]]], output_path: str, mode="w") -> bool:
    """
    Save data as a JSON Lines file

    Args:
        data: A single record or a list of records
        output_path: Output file path
        mode: 'w' overwrites, 'a' appends

    Returns:
        True on success; raises on failure
    """
    try:
        _ensure_parent(output_path)
        rows = [data] if isinstance(data, dict) else list(data)
        with jsonlines.open(output_path, mode=mode, dumps=dumps_sorted) as writer:
            writer.write_all(rows)
        logger.info(f"Data successfully saved to {output_path}")
        return True
    except Exception as e:
        logger.error(f"Error saving to {output_path}: {e}")
        raise


def load_jsonl(path: str) -> List[Dict[str, Any]]:
    with jsonlines.open(path) as reader:
        return list(reader)


def save_to_json(data: Union[Dict[str, Any], List[Dict[str, Any]]], file_name: str) -> bool:
    """
    Save data as an indented JSON file with sorted keys

    Returns:
        True on success; raises on failure
    """
    try:
        _ensure_parent(file_name)
        with open(file_name, "w", encoding="utf-8") as f:
            json.dump(data, f, ensure_ascii=False, indent=4, sort_keys=True)
            f.write("\n")
        logger.info(f"Data successfully saved to {file_name}")
        return True
    except Exception as e:
        logger.error(f"Error saving to {file_name}: {e}")
        raise


def save_csv(rows: List[Dict[str, Any]], output_path: str, columns: Optional[List[str]] = None) -> bool:
    """Export flat records to CSV in the given column order"""
    try:
        _ensure_parent(output_path)
        frame = pd.DataFrame(rows, columns=columns)
        frame.to_csv(output_path, index=False, encoding="utf-8", lineterminator="\n")
        logger.info(f"CSV report saved to {output_path}")
        return True
    except Exception as e:
        logger.error(f"Error saving to {output_path}: {e}")
        raise
