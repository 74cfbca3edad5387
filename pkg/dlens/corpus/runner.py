"""
Corpus Runner

Fans per-file analysis out over a bounded thread pool and assembles pair
rows in manifest order. Each distinct file is analyzed once per run; the
results are gathered into a dictionary only after the pool has finished.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Union

from loguru import logger
from tqdm import tqdm

from ..classifier.thresholds import ThresholdConfig, classify
from ..cognitive import CognitiveAnalyzer, PatternReport, rule_summary
from ..errors import ClassifierError, DlensError
from ..frontend.parser import parse
from ..ngram.model import NgramModel
from ..ngram.perplexity import PerplexityEvaluator
from .manifest import PairRecord
from .report import ReportRow

CC = "cc"
CCD = "ccd"
PPL = "ppl"
METRICS = (CC, CCD, PPL)


@dataclass(frozen=True)
class FileAnalysis:
    """Everything computed for one Java file; `error` is set instead on failure"""
    path: str
    cc: Optional[int] = None
    ccd: Optional[float] = None
    ppl: Optional[float] = None
    token_count: Optional[int] = None
    rules: Optional[Dict[str, Dict[str, Any]]] = None
    patterns: Optional[PatternReport] = None
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None

    def score(self, metric: str) -> Optional[float]:
        return getattr(self, metric)

    def to_dict(self, metric: Optional[str] = None) -> dict:
        data: Dict[str, Any] = {"path": self.path}
        for name in (metric,) if metric else METRICS:
            if self.score(name) is not None:
                data[name] = self.score(name)
        if self.token_count is not None and metric in (None, PPL):
            data["tokens"] = self.token_count
        if self.rules is not None and metric in (None, CCD):
            data["rules"] = self.rules
        if self.patterns is not None and metric is None:
            data["patterns"] = self.patterns.present
        data["error"] = self.error
        return data


def collect_java_files(paths: Iterable[Union[str, Path]]) -> List[Path]:
    """Expand directories to their *.java files (sorted); keep file arguments in order"""
    files: List[Path] = []
    for path in map(Path, paths):
        if path.is_dir():
            files.extend(sorted(p for p in path.rglob("*.java") if p.is_file()))
        else:
            files.append(path)
    return files


class CorpusRunner:
    """
    Analyzes files and file pairs with a shared configuration
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None, model: Optional[NgramModel] = None):
        """
        Args:
            config: resolved dlens configuration (see utils.config)
            model: language model, required only for the ppl metric
        """
        self.config = config or {}
        self.analyzer = CognitiveAnalyzer(self.config)
        self.model = model
        self.evaluator = PerplexityEvaluator(model) if model is not None else None

        general = self.config.get("general", {})
        self.num_workers = max(1, int(general.get("num_workers", 4)))
        self.show_progress = bool(general.get("progress", True))

    # ------------------------------------------------------------ files

    def analyze_file(self, path: Union[str, Path], metrics: Sequence[str] = METRICS, patterns: bool = True) -> FileAnalysis:
        """
        Compute the requested metrics for one file

        Parse, lex and I/O failures are captured in the result, never raised.
        """
        path = str(path)
        try:
            source = Path(path).read_text(encoding="utf-8")
            values: Dict[str, Any] = {}
            if CC in metrics or CCD in metrics or patterns:
                unit = parse(source, path)
                analysis = self.analyzer.analyze(unit)
                values["cc"] = analysis["cc"].file_total
                values["ccd"] = analysis["ccd"].file_total
                values["rules"] = rule_summary(analysis["ccd"])
                if patterns:
                    values["patterns"] = analysis["patterns"]
            if PPL in metrics:
                if self.evaluator is None:
                    raise DlensError("perplexity requested without a language model")
                score = self.evaluator.evaluate(source, path)
                values["ppl"] = score.value
                values["token_count"] = score.token_count
            logger.debug(f"Analyzed {path}")
            return FileAnalysis(path=path, **values)
        except (DlensError, OSError, UnicodeDecodeError) as e:
            logger.warning(f"Failed to analyze {path}: {e}")
            return FileAnalysis(path=path, error=str(e))

    def analyze_files(
        self,
        paths: Iterable[Union[str, Path]],
        metrics: Sequence[str] = METRICS,
        patterns: bool = True,
        desc: str = "Analyzing",
    ) -> Dict[str, FileAnalysis]:
        """Analyze distinct files concurrently; keys keep first-seen order"""
        unique = list(dict.fromkeys(str(path) for path in paths))
        with ThreadPoolExecutor(max_workers=self.num_workers) as executor:
            results = list(
                tqdm(
                    executor.map(lambda p: self.analyze_file(p, metrics, patterns), unique),
                    total=len(unique),
                    desc=desc,
                    disable=not self.show_progress,
                )
            )
        failed = sum(1 for result in results if not result.ok)
        logger.info(f"Analyzed {len(results)} files ({failed} failed)")
        return dict(zip(unique, results))

    # ------------------------------------------------------------ pairs

    def pair_rows(
        self,
        records: Sequence[PairRecord],
        thresholds: Mapping[str, ThresholdConfig],
        patterns: bool = True,
    ) -> List[ReportRow]:
        """
        Score and classify every pair with each metric in `thresholds`

        Args:
            records: manifest records
            thresholds: metric -> threshold configuration
            patterns: also record patterns present in the decompiled file

        Returns:
            One ReportRow per record, in manifest order
        """
        metrics = list(thresholds)
        paths = [p for record in records for p in (record.source_path, record.decompiled_path)]
        analyses = self.analyze_files(paths, metrics, patterns, desc="Scoring pairs")
        return [self._pair_row(record, analyses, thresholds, patterns) for record in records]

    def _pair_row(
        self,
        record: PairRecord,
        analyses: Mapping[str, FileAnalysis],
        thresholds: Mapping[str, ThresholdConfig],
        patterns: bool,
    ) -> ReportRow:
        row = ReportRow(
            pair_id=record.pair_id,
            label=record.label,
            project=record.project,
            decompiler=record.decompiler,
        )
        original = analyses[str(record.source_path)]
        decompiled = analyses[str(record.decompiled_path)]
        for side, analysis in (("original", original), ("decompiled", decompiled)):
            if not analysis.ok:
                row.errors.append(f"{side}: {analysis.error}")
        if patterns and decompiled.patterns is not None:
            row.patterns = decompiled.patterns.present
        if not row.ok:
            logger.warning(f"Pair {record.pair_id}: {'; '.join(row.errors)}")
            return row

        for metric, config in thresholds.items():
            x, ori = decompiled.score(metric), original.score(metric)
            row.scores[metric] = {"original": ori, "decompiled": x}
            try:
                row.predicted[metric] = classify(x, ori, config)
            except ClassifierError as e:
                row.errors.append(f"{metric}: {e}")
                logger.warning(f"Pair {record.pair_id}: cannot classify {metric}: {e}")
        return row
