"""
Corpus Module

Pair manifests, concurrent per-file analysis and report rows.
"""

from .manifest import MANIFEST_COLUMNS, PairRecord, has_labels, load_manifest, require_labels
from .report import (
    ReportRow,
    csv_columns,
    fmt,
    render_eval_report,
    render_pair_summary,
    render_pattern_counts,
    render_tuning,
)
from .runner import CC, CCD, METRICS, PPL, CorpusRunner, FileAnalysis, collect_java_files

__all__ = [
    "MANIFEST_COLUMNS",
    "PairRecord",
    "has_labels",
    "load_manifest",
    "require_labels",
    "ReportRow",
    "csv_columns",
    "fmt",
    "render_eval_report",
    "render_pair_summary",
    "render_pattern_counts",
    "render_tuning",
    "CC",
    "CCD",
    "METRICS",
    "PPL",
    "CorpusRunner",
    "FileAnalysis",
    "collect_java_files",
]
