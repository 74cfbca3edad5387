#!/usr/bin/env python3
"""
dlens Command Line Interface

Subcommands:
    score      per-file CC / CC^D / perplexity scores
    compare    classify manifest pairs Less/Equi/More, evaluate when labelled
    train-lm   train the n-gram language model on a directory of Java files
    tune       grid-search the classification threshold on a labelled manifest
    patterns   decompiler pattern occurrence table
    evaluate   precision/recall/F1 of a 3x3 confusion matrix

Reports are JSON Lines on stdout (or --output); logs and summary tables go
to stderr. Exit codes: 0 success, 1 usage error, 2 data error.
"""

import argparse
import json
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Sequence, TextIO

from loguru import logger

from . import DLens, __version__
from .classifier import MODES, ConfusionMatrix, evaluate_matrix
from .corpus import (
    CCD,
    METRICS,
    PPL,
    csv_columns,
    load_manifest,
    render_eval_report,
    render_pair_summary,
    render_pattern_counts,
    render_tuning,
)
from .errors import ClassifierError, ConfigError, DlensError, InvalidThreshold
from .utils.config import load_config
from .utils.io_utils import save_csv, write_jsonl
from .utils.logger import setup_logger

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class UsageError(Exception):
    """Bad command line: unknown option, invalid combination or missing --model"""


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser whose errors exit with code 1 instead of 2"""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def number_list(text: str) -> List[float]:
    """Comma-separated grid such as `0,1,2` or `0.1,0.2`"""
    try:
        values = [float(item) if "." in item else int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("grid must hold at least one value")
    return values


def parse_arguments(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Parse command line arguments"""
    # Options shared by every subcommand
    common = ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None, help="Configuration file path (YAML)")
    common.add_argument("--log-level", type=str, default=None, help="Console log level (DEBUG, INFO, WARNING, ERROR)")
    common.add_argument("--log-dir", type=str, default=None, help="Also write daily log files to this directory")
    common.add_argument("--workers", type=positive_int, default=None, help="Number of worker threads")
    common.add_argument("--no-progress", action="store_true", help="Hide progress bars")
    common.add_argument("--output", type=str, default=None, help="Write the JSON Lines report here instead of stdout")

    parser = ArgumentParser(prog="dlens", description="Understandability metrics for decompiled Java code")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    score = subparsers.add_parser("score", parents=[common], help="Score Java files")
    score.add_argument("paths", nargs="+", help="Java files or directories")
    score.add_argument("--metric", choices=METRICS, default=CCD, help="Metric to compute")
    score.add_argument("--model", type=str, default=None, help="Language model file (required for ppl)")

    compare = subparsers.add_parser("compare", parents=[common], help="Classify manifest pairs")
    compare.add_argument("--manifest", type=str, required=True, help="Pair manifest (CSV)")
    compare.add_argument("--metric", choices=METRICS, default=CCD, help="Metric to classify with")
    compare.add_argument("--mode", choices=MODES, default=None, help="Threshold mode (default: ratio for ppl, else absolute)")
    compare.add_argument("--threshold", type=float, default=None, help="Threshold t")
    compare.add_argument("--model", type=str, default=None, help="Language model file (required for ppl)")
    compare.add_argument("--csv", type=str, default=None, help="Also export rows as CSV")
    compare.add_argument("--summary", action="store_true", help="Print summary tables to stderr")

    train_lm = subparsers.add_parser("train-lm", parents=[common], help="Train the n-gram language model")
    train_lm.add_argument("corpus_dir", help="Directory of Java files")
    train_lm.add_argument("--out", type=str, required=True, help="Model output path")
    train_lm.add_argument("--order", type=positive_int, default=None, help="n-gram order (default 5)")
    train_lm.add_argument("--min-count", type=positive_int, default=None, help="Tokens seen fewer times become <unk>")

    tune = subparsers.add_parser("tune", parents=[common], help="Tune the classification threshold")
    tune.add_argument("--manifest", type=str, required=True, help="Labelled pair manifest (CSV)")
    tune.add_argument("--metric", choices=METRICS, default=CCD, help="Metric to tune")
    tune.add_argument("--mode", choices=MODES, default=None, help="Threshold mode")
    tune.add_argument("--grid", type=number_list, default=None, help="Comma-separated candidate thresholds")
    tune.add_argument("--model", type=str, default=None, help="Language model file (required for ppl)")
    tune.add_argument("--summary", action="store_true", help="Print the grid table to stderr")

    patterns = subparsers.add_parser("patterns", parents=[common], help="Detect decompiler code patterns")
    patterns.add_argument("paths", nargs="*", help="Java files or directories")
    patterns.add_argument("--manifest", type=str, default=None, help="Pair manifest; decompiled files are checked")
    patterns.add_argument("--model", type=str, default=None, help="Language model; adds the unrecognized-Less column")
    patterns.add_argument("--summary", action="store_true", help="Print the pattern table to stderr")

    evaluate = subparsers.add_parser("evaluate", parents=[common], help="Evaluate a confusion matrix")
    evaluate.add_argument("matrix", help="JSON [[...],[...],[...]] (rows predicted) or a file holding it")
    evaluate.add_argument("--decimals", type=int, default=2, help="Rounding of reported metrics")

    return parser.parse_args(argv)


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    """CLI flags in configuration form"""
    general: Dict[str, Any] = {}
    if args.workers is not None:
        general["num_workers"] = args.workers
    if args.no_progress:
        general["progress"] = False
    logging_section = {}
    if args.log_level:
        logging_section["level"] = args.log_level
    if args.log_dir:
        logging_section["log_dir"] = args.log_dir
    if logging_section:
        general["logging"] = logging_section
    return {"general": general} if general else {}


@contextmanager
def _report_stream(args: argparse.Namespace) -> Iterator[TextIO]:
    if args.output:
        path = Path(args.output)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as stream:
            yield stream
    else:
        yield sys.stdout


def _emit(args: argparse.Namespace, rows: List[Dict[str, Any]]) -> None:
    with _report_stream(args) as stream:
        write_jsonl(rows, stream)


def _require_model(args: argparse.Namespace, metric: Optional[str]) -> None:
    if metric == PPL and not args.model:
        raise UsageError(f"dlens {args.command}: error: the ppl metric requires --model")


def _report_dicts(report, decimals: int = 2) -> Dict[str, Any]:
    return {group: value.to_dict(decimals) for group, value in report.items()}


# ----------------------------------------------------------------- commands

def cmd_score(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    """Score files; one row per file"""
    _require_model(args, args.metric)
    dlens = DLens(config=config, model_path=args.model)
    analyses = dlens.score_files(args.paths, args.metric)

    rows = []
    for analysis in analyses:
        row = analysis.to_dict(args.metric)
        row["metric"] = args.metric
        row["score"] = row.pop(args.metric, None)
        rows.append(row)
    _emit(args, rows)
    failed = sum(1 for analysis in analyses if not analysis.ok)
    logger.info(f"Scored {len(analyses) - failed}/{len(analyses)} files with {args.metric}")
    return EXIT_DATA if failed else EXIT_OK


def cmd_compare(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    """Classify pairs; append an evaluation row when labels are present"""
    _require_model(args, args.metric)
    dlens = DLens(config=config, model_path=args.model)
    threshold = dlens.threshold_config(args.metric, args.mode, args.threshold)
    records = load_manifest(args.manifest)
    result = dlens.compare(records, args.metric, threshold)

    rows = result["rows"]
    output = [row.to_dict() for row in rows]
    if "evaluation" in result:
        evaluation_row = {
            "kind": "evaluation",
            "metric": args.metric,
            "threshold": threshold.to_dict(),
            "overall": result["evaluation"].to_dict(),
        }
        for key in ("by_project", "by_decompiler"):
            if key in result:
                evaluation_row[key] = _report_dicts(result[key])
        output.append(evaluation_row)
    _emit(args, output)

    if args.csv:
        save_csv([row.to_flat([args.metric]) for row in rows], args.csv, csv_columns([args.metric]))
    if args.summary:
        render_pair_summary(rows, args.metric)
        if "evaluation" in result:
            render_eval_report(result["evaluation"], title=f"Evaluation ({args.metric}, t={threshold.t:g})")
    return EXIT_OK if all(row.ok for row in rows) else EXIT_DATA


def cmd_train_lm(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    """Train and save the language model"""
    dlens = DLens(config=config)
    stats = dlens.train_language_model(args.corpus_dir, args.out, order=args.order, min_count=args.min_count)
    _emit(args, [{"kind": "model", **stats}])
    logger.info(f"Model with {stats['vocab_size']} types over {stats['token_count']} tokens saved to {args.out}")
    return EXIT_DATA if stats["failed"] else EXIT_OK


def cmd_tune(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    """Best threshold and the full grid"""
    _require_model(args, args.metric)
    dlens = DLens(config=config, model_path=args.model)
    records = load_manifest(args.manifest)
    result = dlens.tune(records, args.metric, args.mode, args.grid)

    tuning = result["tuning"]
    failed = [row for row in result["rows"] if not row.ok]
    output = [row.to_dict() for row in failed]
    output.append({"kind": "tuning", "metric": args.metric, "pairs": len(records) - len(failed), **tuning.to_dict()})
    _emit(args, output)
    if args.summary:
        render_tuning(tuning, args.metric)
    return EXIT_DATA if failed else EXIT_OK


def cmd_patterns(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    """Per-file pattern sets followed by one aggregate row"""
    if bool(args.paths) == bool(args.manifest):
        raise UsageError("dlens patterns: error: give either Java paths or --manifest")
    dlens = DLens(config=config, model_path=args.model)
    if args.manifest:
        rows = dlens.manifest_pattern_rows(load_manifest(args.manifest))
        output = [row.to_dict() for row in rows]
    else:
        rows = dlens.file_pattern_rows(args.paths)
        output = [
            {"kind": "file", "path": row.pair_id, "patterns": row.patterns, "error": "; ".join(row.errors) or None}
            for row in rows
        ]
    statistics = dlens.pattern_statistics(rows)
    output.append(statistics)
    _emit(args, output)
    if args.summary:
        render_pattern_counts(statistics)
    return EXIT_OK if all(row.ok for row in rows) else EXIT_DATA


def _read_matrix(text: str) -> List[List[int]]:
    if not text.lstrip().startswith("["):
        text = Path(text).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ClassifierError(f"confusion matrix is not valid JSON: {e}") from e


def cmd_evaluate(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    """Metrics of a published or externally produced matrix"""
    report = evaluate_matrix(ConfusionMatrix.from_rows(_read_matrix(args.matrix)))
    _emit(args, [{"kind": "evaluation", **report.to_dict(args.decimals)}])
    return EXIT_OK


COMMANDS = {
    "score": cmd_score,
    "compare": cmd_compare,
    "train-lm": cmd_train_lm,
    "tune": cmd_tune,
    "patterns": cmd_patterns,
    "evaluate": cmd_evaluate,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main function; returns the process exit code"""
    try:
        args = parse_arguments(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help and --version
        return int(e.code or 0)

    try:
        config = load_config(args.config, overrides=_overrides(args))
    except ConfigError as e:
        print(f"dlens: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logging_config = config["general"]["logging"]
    setup_logger("dlens", logging_config.get("level", "INFO"), logging_config.get("log_dir"))
    logger.debug(f"Running {args.command} with {vars(args)}")

    try:
        return COMMANDS[args.command](args, config)
    except (UsageError, ConfigError, InvalidThreshold) as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except (DlensError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
