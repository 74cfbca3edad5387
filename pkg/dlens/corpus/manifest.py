"""
Pair Manifest

A manifest is a UTF-8 CSV file with the header
`pair_id,source_path,decompiled_path,label,project,decompiler`.
The last three columns are optional and may be left empty. Relative paths
are resolved against the manifest's own directory.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Union

import pandas as pd
from loguru import logger

from ..classifier.labels import Label
from ..errors import ClassifierError, EmptyManifest, ManifestFormatError, MissingLabels

REQUIRED_COLUMNS = ("pair_id", "source_path", "decompiled_path")
OPTIONAL_COLUMNS = ("label", "project", "decompiler")
MANIFEST_COLUMNS = REQUIRED_COLUMNS + OPTIONAL_COLUMNS


@dataclass(frozen=True)
class PairRecord:
    """One (original, decompiled) file pair"""
    pair_id: str
    source_path: Path
    decompiled_path: Path
    label: Optional[Label] = None
    project: Optional[str] = None
    decompiler: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "pair_id": self.pair_id,
            "source_path": str(self.source_path),
            "decompiled_path": str(self.decompiled_path),
            "label": str(self.label) if self.label else None,
            "project": self.project,
            "decompiler": self.decompiler,
        }


def _optional(value: str) -> Optional[str]:
    value = value.strip()
    return value or None


def _resolve(base_dir: Path, value: str) -> Path:
    path = Path(value.strip())
    return path if path.is_absolute() else base_dir / path


def load_manifest(path: Union[str, Path]) -> List[PairRecord]:
    """
    Read a pair manifest

    Args:
        path: CSV manifest file

    Returns:
        PairRecords in file order

    Raises:
        EmptyManifest: no pair rows
        ManifestFormatError: missing required columns, unknown columns,
            duplicate pair ids, empty required cells or bad labels
    """
    path = Path(path)
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8", skipinitialspace=True)
    except pd.errors.EmptyDataError as e:
        raise EmptyManifest(f"{path}: manifest is empty") from e
    except (pd.errors.ParserError, UnicodeDecodeError) as e:
        raise ManifestFormatError(f"{path}: {e}") from e

    columns = [str(column).strip() for column in frame.columns]
    frame.columns = columns
    missing = [column for column in REQUIRED_COLUMNS if column not in columns]
    if missing:
        raise ManifestFormatError(f"{path}: missing required column(s) {', '.join(missing)}")
    unknown = [column for column in columns if column not in MANIFEST_COLUMNS]
    if unknown:
        raise ManifestFormatError(f"{path}: unknown column(s) {', '.join(unknown)}")
    if frame.empty:
        raise EmptyManifest(f"{path}: manifest has no pair rows")

    base_dir = path.parent
    records: List[PairRecord] = []
    seen = set()
    # Row numbers count the header as line 1
    for line, row in enumerate(frame.to_dict(orient="records"), start=2):
        pair_id = row["pair_id"].strip()
        if not pair_id or not row["source_path"].strip() or not row["decompiled_path"].strip():
            raise ManifestFormatError(f"{path}:{line}: pair_id, source_path and decompiled_path are required")
        if pair_id in seen:
            raise ManifestFormatError(f"{path}:{line}: duplicate pair_id {pair_id!r}")
        seen.add(pair_id)
        try:
            label = Label.parse_optional(row.get("label", ""))
        except ClassifierError as e:
            raise ManifestFormatError(f"{path}:{line}: {e}") from e
        records.append(
            PairRecord(
                pair_id=pair_id,
                source_path=_resolve(base_dir, row["source_path"]),
                decompiled_path=_resolve(base_dir, row["decompiled_path"]),
                label=label,
                project=_optional(row.get("project", "")),
                decompiler=_optional(row.get("decompiler", "")),
            )
        )

    logger.info(f"Loaded {len(records)} pairs from {path}")
    return records


def has_labels(records: Sequence[PairRecord]) -> bool:
    return bool(records) and all(record.label is not None for record in records)


def require_labels(records: Sequence[PairRecord]) -> List[Label]:
    """Ground-truth labels of every record; raises MissingLabels if any is absent"""
    unlabelled = [record.pair_id for record in records if record.label is None]
    if unlabelled:
        shown = ", ".join(unlabelled[:5])
        more = f" (+{len(unlabelled) - 5} more)" if len(unlabelled) > 5 else ""
        raise MissingLabels(f"manifest rows without a label: {shown}{more}")
    return [record.label for record in records]
