#!/usr/bin/env python3
"""
dlens Batch Evaluation Script

Runs the full study over one labelled manifest:
1. Train (or load) the n-gram language model
2. Tune the threshold of CC, CC^D and perplexity on the manifest
3. Classify and evaluate every pair with each tuned threshold
4. Count decompiler patterns with the a/b/c breakdown

Every report lands in --output_dir as JSON, JSON Lines and CSV.
"""

import argparse
import os
import sys
import time
from pathlib import Path

import dotenv

# Add project root directory to path
project_root = Path(__file__).parent.parent
sys.path.append(str(project_root))

from dlens import DLens
from dlens.corpus import CC, CCD, METRICS, PPL, csv_columns, has_labels, load_manifest
from dlens.corpus import render_eval_report, render_pattern_counts, render_tuning
from dlens.errors import DlensError
from dlens.utils.config import load_config
from dlens.utils.io_utils import save_csv, save_jsonl, save_to_json
from dlens.utils.logger import setup_logger


dotenv.load_dotenv(project_root / ".env")


def parse_arguments():
    """Parse command line arguments"""
    parser = argparse.ArgumentParser(description="dlens Batch Evaluation")

    parser.add_argument(
        "--config",
        type=str,
        default=None,
        help="Configuration file path (default: config/dlens_config.yaml)"
    )

    parser.add_argument(
        "--manifest",
        type=str,
        default="data/examples/java/manifest.csv",
        help="Pair manifest (CSV)"
    )

    # Language model
    parser.add_argument(
        "--corpus_dir",
        type=str,
        default=None,
        help="Train the language model on this directory of Java files"
    )

    parser.add_argument(
        "--model",
        type=str,
        default=None,
        help="Existing language model file (skips training)"
    )

    parser.add_argument(
        "--order",
        type=int,
        default=None,
        help="n-gram order used for training"
    )

    parser.add_argument(
        "--metrics",
        type=str,
        default=",".join(METRICS),
        help="Comma-separated metrics to evaluate"
    )

    parser.add_argument(
        "--no_tune",
        action="store_true",
        help="Classify with the configured thresholds instead of tuned ones"
    )

    parser.add_argument(
        "--output_dir",
        type=str,
        default="data/reports/",
        help="Output directory path"
    )

    # Debug parameters
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="Print summary tables"
    )

    parser.add_argument(
        "--debug",
        action="store_true",
        help="Debug mode"
    )

    parser.add_argument(
        "--num_workers",
        type=int,
        default=None,
        help="Number of worker threads"
    )

    return parser.parse_args()


def prepare_model(dlens, args, logger):
    """Load --model, or train one on --corpus_dir; returns the model path or None"""
    if args.model:
        logger.info(f"📥 Using language model {args.model}")
        return args.model
    if not args.corpus_dir:
        logger.warning("⚠️  No --model or --corpus_dir given, perplexity is skipped")
        return None

    model_path = os.path.join(args.output_dir, "model", "java.lm")
    start_time = time.time()
    stats = dlens.train_language_model(args.corpus_dir, model_path, order=args.order)
    elapsed = time.time() - start_time
    logger.info(f"✅ Trained order-{stats['order']} model on {stats['files']} files in {elapsed:.2f} seconds")
    if stats["failed"]:
        logger.warning(f"⚠️  {len(stats['failed'])} files could not be lexed")
    save_to_json(stats, os.path.join(args.output_dir, "model", "model_stats.json"))
    return model_path


def run_metric(dlens, records, metric, args, logger):
    """Tune, classify and evaluate one metric; returns its summary"""
    logger.info(f"📏 Evaluating {metric}")
    labelled = has_labels(records)
    summary = {"metric": metric}

    threshold = dlens.threshold_config(metric)
    if labelled and not args.no_tune:
        tuning = dlens.tune(records, metric)["tuning"]
        threshold = dlens.threshold_config(metric, tuning.mode, tuning.best_t)
        summary["tuning"] = tuning.to_dict()
        logger.info(f"🎯 Best t for {metric}: {tuning.best_t:g} (macro F1 {tuning.best_macro_f1:.4f})")
        if args.verbose:
            render_tuning(tuning, metric)

    result = dlens.compare(records, metric, threshold)
    rows = result["rows"]
    summary["threshold"] = threshold.to_dict()
    summary["failed"] = sum(1 for row in rows if not row.ok)

    metric_dir = os.path.join(args.output_dir, metric)
    save_jsonl([row.to_dict() for row in rows], os.path.join(metric_dir, "pairs.jsonl"))
    save_csv([row.to_flat([metric]) for row in rows], os.path.join(metric_dir, "pairs.csv"), csv_columns([metric]))

    if "evaluation" in result:
        evaluation = {"overall": result["evaluation"].to_dict()}
        for key in ("by_project", "by_decompiler"):
            if key in result:
                evaluation[key] = {group: report.to_dict() for group, report in result[key].items()}
        save_to_json(evaluation, os.path.join(metric_dir, "evaluation.json"))
        summary["macro_f1"] = evaluation["overall"]["macro_f1"]
        if args.verbose:
            render_eval_report(result["evaluation"], title=f"Evaluation ({metric}, t={threshold.t:g})")
    return summary


def run_patterns(dlens, records, args, logger):
    """Pattern statistics over the decompiled files"""
    logger.info("🔍 Counting decompiler patterns")
    rows = dlens.manifest_pattern_rows(records)
    statistics = dlens.pattern_statistics(rows)
    save_to_json(statistics, os.path.join(args.output_dir, "patterns.json"))
    if args.verbose:
        render_pattern_counts(statistics)
    return statistics


def main():
    """Main function"""
    args = parse_arguments()

    overrides = {"general": {"progress": not args.debug}}
    if args.num_workers:
        overrides["general"]["num_workers"] = args.num_workers
    try:
        config = load_config(args.config, overrides=overrides)
    except DlensError as e:
        print(f"❌ Configuration error: {e}")
        sys.exit(1)

    log_level = "DEBUG" if args.debug else ("INFO" if args.verbose else "WARNING")
    logger = setup_logger("dlens_evaluation", log_level, config["general"]["logging"].get("log_dir"))

    metrics = [metric.strip() for metric in args.metrics.split(",") if metric.strip()]
    unknown = [metric for metric in metrics if metric not in METRICS]
    if unknown:
        logger.error(f"❌ Unknown metric(s): {', '.join(unknown)}")
        sys.exit(1)

    logger.info("🔧 Initializing dlens")
    logger.info(f"📋 Manifest: {args.manifest}")
    logger.info(f"📁 Output directory: {args.output_dir}")
    os.makedirs(args.output_dir, exist_ok=True)

    total_start_time = time.time()
    try:
        records = load_manifest(args.manifest)
        dlens = DLens(config=config)
        model_path = prepare_model(dlens, args, logger)
        if model_path and dlens.model is None:
            dlens = DLens(config=config, model_path=model_path)
        if PPL in metrics and dlens.model is None:
            metrics.remove(PPL)

        results = {"manifest": args.manifest, "pairs": len(records), "metrics": {}}
        for metric in metrics:
            results["metrics"][metric] = run_metric(dlens, records, metric, args, logger)
        statistics = run_patterns(dlens, records, args, logger)
        results["files_with_pattern"] = statistics["files_with_pattern"]
    except DlensError as e:
        logger.error(f"❌ Evaluation failed: {e}")
        if args.debug:
            import traceback
            traceback.print_exc()
        sys.exit(2)

    total_elapsed = time.time() - total_start_time
    results["elapsed_seconds"] = round(total_elapsed, 2)
    results_path = os.path.join(args.output_dir, "evaluation_results.json")
    save_to_json(results, results_path)

    for metric in (CC, CCD, PPL):
        if metric in results["metrics"] and "macro_f1" in results["metrics"][metric]:
            logger.info(f"📊 {metric}: macro F1 {results['metrics'][metric]['macro_f1']}")
    logger.info(f"📄 Results saved to: {results_path}")
    logger.info(f"🏁 Evaluation completed in {total_elapsed:.2f} seconds")


if __name__ == "__main__":
    main()
