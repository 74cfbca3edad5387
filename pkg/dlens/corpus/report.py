"""
Report Rows and Summary Tables

ReportRow is the unit of the JSON Lines reports written by `compare`,
`tune` and the batch evaluation script. Human-readable summaries are
rendered with rich on stderr so stdout stays machine-readable.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional

from rich.console import Console
from rich.table import Table

from ..classifier.evaluation import EvalReport
from ..classifier.labels import LABEL_ORDER, Label
from ..classifier.tuning import TuningResult
from ..cognitive.rules import RuleCatalog, RuleKind
from ..utils.io_utils import round_half_away

Score = float


@dataclass
class ReportRow:
    """Scores, predicted labels and decompiled-file patterns of one pair"""
    pair_id: str
    label: Optional[Label] = None
    project: Optional[str] = None
    decompiler: Optional[str] = None
    # metric -> {"original": score, "decompiled": score}
    scores: Dict[str, Dict[str, Score]] = field(default_factory=dict)
    predicted: Dict[str, Label] = field(default_factory=dict)
    patterns: List[str] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def score_pair(self, metric: str):
        """(decompiled, original) as the classifier expects them"""
        scores = self.scores[metric]
        return scores["decompiled"], scores["original"]

    def to_dict(self) -> dict:
        return {
            "kind": "pair",
            "pair_id": self.pair_id,
            "label": str(self.label) if self.label else None,
            "project": self.project,
            "decompiler": self.decompiler,
            "scores": self.scores,
            "predicted": {metric: str(label) for metric, label in self.predicted.items()},
            "patterns": self.patterns,
            "error": "; ".join(self.errors) if self.errors else None,
        }

    def to_flat(self, metrics: List[str]) -> Dict[str, Any]:
        """Single-level record for CSV export"""
        flat: Dict[str, Any] = {
            "pair_id": self.pair_id,
            "label": str(self.label) if self.label else "",
            "project": self.project or "",
            "decompiler": self.decompiler or "",
        }
        for metric in metrics:
            scores = self.scores.get(metric, {})
            flat[f"{metric}_original"] = scores.get("original")
            flat[f"{metric}_decompiled"] = scores.get("decompiled")
            predicted = self.predicted.get(metric)
            flat[f"{metric}_predicted"] = str(predicted) if predicted else ""
        flat["patterns"] = " ".join(self.patterns)
        flat["error"] = "; ".join(self.errors)
        return flat


def csv_columns(metrics: List[str]) -> List[str]:
    columns = ["pair_id", "label", "project", "decompiler"]
    for metric in metrics:
        columns += [f"{metric}_original", f"{metric}_decompiled", f"{metric}_predicted"]
    return columns + ["patterns", "error"]


def fmt(value: Optional[float]) -> str:
    """Two-decimal text, rounded half away from zero"""
    if value is None:
        return "-"
    return f"{round_half_away(value, 2):.2f}"


def stderr_console() -> Console:
    return Console(stderr=True)


def render_pair_summary(rows: List[ReportRow], metric: str, console: Optional[Console] = None) -> None:
    """Label distribution of predictions (and truths when present)"""
    console = console or stderr_console()
    table = Table(title=f"Predicted labels ({metric})")
    table.add_column("Label")
    table.add_column("Predicted", justify="right")
    table.add_column("Ground truth", justify="right")
    for label in LABEL_ORDER:
        predicted = sum(1 for row in rows if row.predicted.get(metric) == label)
        truth = sum(1 for row in rows if row.label == label)
        table.add_row(str(label), str(predicted), str(truth))
    failed = sum(1 for row in rows if not row.ok)
    table.caption = f"{len(rows)} pairs, {failed} failed"
    console.print(table)


def render_eval_report(report: EvalReport, title: str = "Evaluation", console: Optional[Console] = None) -> None:
    console = console or stderr_console()
    table = Table(title=title)
    table.add_column("Class")
    for column in ("Precision", "Recall", "F1"):
        table.add_column(column, justify="right")
    for label in LABEL_ORDER:
        metrics = report.per_class[label]
        table.add_row(str(label), fmt(metrics.precision), fmt(metrics.recall), fmt(metrics.f1))
    table.caption = f"macro F1 {fmt(report.macro_f1)}"
    console.print(table)


def render_pattern_counts(statistics: Mapping[str, Any], console: Optional[Console] = None) -> None:
    """Files containing each pattern, with a/b(/c) columns when available"""
    console = console or stderr_console()
    table = Table(title="Number of decompiled files with patterns")
    table.add_column("Pattern")
    table.add_column("Name")
    table.add_column("Files", justify="right")
    labelled = statistics.get("labelled")
    if labelled:
        table.add_column("Less (b/a)", justify="right")
        if any("unrecognized" in entry for entry in labelled.values()):
            table.add_column("Missed (c/b)", justify="right")
    for definition in RuleCatalog().get_rules_by_kind(RuleKind.PATTERN):
        pattern_id = definition.rule_id
        cells = [pattern_id, definition.name, str(statistics["files_with_pattern"][pattern_id])]
        if labelled:
            entry = labelled[pattern_id]
            cells.append(f"{entry['less']}/{entry['files']}")
            if "unrecognized" in entry:
                cells.append(f"{entry['unrecognized']}/{entry['less']}")
        table.add_row(*cells)
    table.caption = f"{statistics['total_files']} files"
    console.print(table)


def render_tuning(result: TuningResult, metric: str, console: Optional[Console] = None) -> None:
    console = console or stderr_console()
    table = Table(title=f"Threshold grid ({metric}, {result.mode})")
    table.add_column("t", justify="right")
    table.add_column("Macro F1", justify="right")
    for point in result.grid_results:
        marker = " *" if point.t == result.best_t else ""
        table.add_row(f"{point.t:g}{marker}", fmt(point.macro_f1))
    table.caption = f"best t = {result.best_t:g}, macro F1 {fmt(result.best_macro_f1)}"
    console.print(table)
