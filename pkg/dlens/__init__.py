"""
dlens: Understandability Metrics for Decompiled Java

This package scores how understandable decompiled Java code is compared with
its original source, using three metrics:

1. Cognitive Complexity (CC) - rule-based control-flow understandability
2. Cognitive Complexity^D (CC^D) - CC plus six decompilation-aware rules
3. Perplexity (PPL) - naturalness under an n-gram language model

Pairs are labelled Less/Equi/More by a threshold classifier, which can be
tuned and evaluated against annotated manifests.
"""

from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from loguru import logger

from .classifier import ABSOLUTE, RATIO, EvalReport, Label, ThresholdConfig, evaluate, evaluate_by_group, tune_threshold
from .cognitive import CognitiveAnalyzer
from .corpus import CC, PPL, CorpusRunner, FileAnalysis, PairRecord, ReportRow, collect_java_files, require_labels
from .errors import ConfigError, DlensError, EmptyCorpus
from .frontend.lexer import token_texts
from .ngram import NgramModel, SmoothingConfig, load_model, save_model, train
from .utils.config import load_config

__version__ = "1.0.0"

__all__ = [
    "CognitiveAnalyzer",
    "CorpusRunner",
    "DLens",
]


class DLens:
    """
    Main dlens class that orchestrates corpus-level work:
    1. Scoring files with CC, CC^D or perplexity
    2. Comparing and classifying (original, decompiled) pairs
    3. Threshold tuning and pattern statistics over manifests
    4. Training the n-gram language model
    """

    def __init__(
        self,
        config_path: Optional[str] = None,
        config: Optional[Dict[str, Any]] = None,
        model_path: Optional[Union[str, Path]] = None,
    ):
        """
        Args:
            config_path: YAML configuration file (ignored when `config` is given)
            config: an already resolved configuration
            model_path: language model file, needed for the ppl metric
        """
        self.config = config if config is not None else load_config(config_path)
        self.model: Optional[NgramModel] = load_model(model_path) if model_path else None
        self.runner = CorpusRunner(self.config, self.model)

    # ---------------------------------------------------------- settings

    def threshold_config(self, metric: str, mode: Optional[str] = None, t: Optional[float] = None) -> ThresholdConfig:
        """Perplexity defaults to ratio mode, the structural metrics to absolute mode"""
        mode = mode or (RATIO if metric == PPL else ABSOLUTE)
        if t is None:
            section = self.config.get("classifier", {})
            t = section.get("ratio_threshold" if mode == RATIO else "absolute_threshold")
        return ThresholdConfig(mode, t)

    def grid(self, mode: str) -> List[float]:
        section = self.config.get("classifier", {})
        return list(section.get("ratio_grid" if mode == RATIO else "absolute_grid"))

    def require_model(self) -> NgramModel:
        if self.model is None:
            raise ConfigError("the ppl metric needs a language model (--model)")
        return self.model

    # ----------------------------------------------------------- scoring

    def score_files(self, paths: Sequence[Union[str, Path]], metric: str) -> List[FileAnalysis]:
        """One analysis per file (directories expand to their .java files)"""
        if metric == PPL:
            self.require_model()
        files = collect_java_files(paths)
        analyses = self.runner.analyze_files(files, [metric], patterns=False, desc=f"Scoring {metric}")
        return list(analyses.values())

    def compare(self, records: Sequence[PairRecord], metric: str, threshold: ThresholdConfig) -> Dict[str, Any]:
        """
        Classify every pair and, where ground truth exists, evaluate

        Returns:
            Dictionary with `rows` and, when labelled rows were classified,
            `evaluation`, `by_project` and `by_decompiler` reports
        """
        if metric == PPL:
            self.require_model()
        rows = self.runner.pair_rows(records, {metric: threshold})
        result: Dict[str, Any] = {"rows": rows}

        evaluation = self.evaluate_rows(rows, metric)
        if evaluation is not None:
            result["evaluation"] = evaluation
            scored = [row for row in rows if row.label is not None and metric in row.predicted]
            for key, attribute in (("by_project", "project"), ("by_decompiler", "decompiler")):
                grouped = [row for row in scored if getattr(row, attribute)]
                if grouped:
                    result[key] = evaluate_by_group(
                        [row.predicted[metric] for row in grouped],
                        [row.label for row in grouped],
                        [getattr(row, attribute) for row in grouped],
                    )
            logger.info(f"Macro F1 of {metric} over {len(scored)} labelled pairs: {result['evaluation'].macro_f1:.4f}")
        return result

    def tune(
        self,
        records: Sequence[PairRecord],
        metric: str,
        mode: Optional[str] = None,
        grid: Optional[Sequence[float]] = None,
    ) -> Dict[str, Any]:
        """
        Grid-search the threshold on a labelled manifest

        Pairs whose scores cannot be computed are reported and left out.

        Returns:
            Dictionary with the TuningResult and the scored rows
        """
        require_labels(records)
        if metric == PPL:
            self.require_model()
        config = self.threshold_config(metric, mode)
        rows = self.runner.pair_rows(records, {metric: config}, patterns=False)
        usable = [row for row in rows if row.ok]
        tuning = tune_threshold(
            [row.score_pair(metric) for row in usable],
            [row.label for row in usable],
            mode=config.mode,
            grid=grid if grid is not None else self.grid(config.mode),
        )
        return {"tuning": tuning, "rows": rows}

    # ---------------------------------------------------------- patterns

    def file_pattern_rows(self, paths: Sequence[Union[str, Path]]) -> List[ReportRow]:
        """Pattern rows for loose files; `pair_id` holds the file path"""
        analyses = self.runner.analyze_files(collect_java_files(paths), metrics=(), patterns=True, desc="Patterns")
        return [
            ReportRow(
                pair_id=analysis.path,
                patterns=analysis.patterns.present if analysis.ok else [],
                errors=[] if analysis.ok else [analysis.error],
            )
            for analysis in analyses.values()
        ]

    def manifest_pattern_rows(self, records: Sequence[PairRecord]) -> List[ReportRow]:
        """Pattern rows of decompiled files; with a model, also CC and PPL predictions"""
        thresholds: Dict[str, ThresholdConfig] = {}
        if self.model is not None:
            thresholds = {CC: self.threshold_config(CC, ABSOLUTE), PPL: self.threshold_config(PPL, RATIO)}
        return self.runner.pair_rows(records, thresholds, patterns=True)

    def pattern_statistics(self, rows: Sequence[ReportRow]) -> Dict[str, Any]:
        """
        Aggregate pattern counts over successfully analyzed rows

        With labels on every row, each pattern also gets `files` (a), the
        number of those files labelled Less (b) and, when CC and PPL
        predictions exist, `unrecognized` (c): Less files that neither
        metric predicts as Less.
        """
        ok = [row for row in rows if row.ok]
        statistics = self.runner.analyzer.get_pattern_statistics([row.patterns for row in ok])
        statistics["kind"] = "aggregate"
        statistics["failed"] = len(rows) - len(ok)

        for key, attribute in (("by_project", "project"), ("by_decompiler", "decompiler")):
            groups = sorted({getattr(row, attribute) for row in ok if getattr(row, attribute)})
            if groups:
                statistics[key] = {
                    group: self.runner.analyzer.get_pattern_statistics(
                        [row.patterns for row in ok if getattr(row, attribute) == group]
                    )["files_with_pattern"]
                    for group in groups
                }

        if ok and all(row.label is not None for row in ok):
            with_predictions = all(CC in row.predicted and PPL in row.predicted for row in ok)
            labelled = {}
            for pattern_id in statistics["files_with_pattern"]:
                having = [row for row in ok if pattern_id in row.patterns]
                less = [row for row in having if row.label == Label.LESS]
                entry = {"files": len(having), "less": len(less)}
                if with_predictions:
                    entry["unrecognized"] = sum(
                        1 for row in less if row.predicted[CC] != Label.LESS and row.predicted[PPL] != Label.LESS
                    )
                labelled[pattern_id] = entry
            statistics["labelled"] = labelled
        return statistics

    # ---------------------------------------------------- language model

    def train_language_model(
        self,
        corpus_dir: Union[str, Path],
        out_path: Union[str, Path],
        order: Optional[int] = None,
        min_count: Optional[int] = None,
    ) -> Dict[str, Any]:
        """
        Train an n-gram model on every .java file under `corpus_dir` and save it

        Files that cannot be read or lexed are skipped and counted in `failed`.

        Raises:
            EmptyCorpus: no file produced a token
        """
        section = self.config.get("ngram", {})
        order = int(order if order is not None else section.get("order", 5))
        min_count = int(min_count if min_count is not None else section.get("min_count", 2))
        smoothing = SmoothingConfig(k=float(section.get("k", 0.01)), beta=float(section.get("beta", 1.0)))

        corpus: List[List[str]] = []
        failed: List[str] = []
        files = collect_java_files([corpus_dir])
        if not files:
            raise EmptyCorpus(f"no .java files under {corpus_dir}")
        for path in files:
            try:
                corpus.append(token_texts(path.read_text(encoding="utf-8"), str(path)))
            except (DlensError, OSError, UnicodeDecodeError) as e:
                logger.warning(f"Skipping {path}: {e}")
                failed.append(str(path))

        model = train(corpus, order=order, smoothing=smoothing, min_count=min_count)
        save_model(model, out_path)
        self.model = model
        self.runner = CorpusRunner(self.config, model)
        return {
            "path": str(out_path),
            "files": len(corpus),
            "failed": failed,
            **model.statistics(),
        }

    @staticmethod
    def evaluate_rows(rows: Sequence[ReportRow], metric: str) -> Optional[EvalReport]:
        scored = [row for row in rows if row.label is not None and metric in row.predicted]
        if not scored:
            return None
        return evaluate([row.predicted[metric] for row in scored], [row.label for row in scored])
