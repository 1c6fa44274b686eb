# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.
"""Run artifacts: traces, summaries, Pareto fronts and batch statistics."""

import logging
import os
from typing import Dict, List, Sequence

import pandas as pd

from fuzzyfs.config import PARETO_COLUMNS, TRACE_COLUMNS
from fuzzyfs.objectives import selected_ratio
from fuzzyfs.run_config import RunConfig
from fuzzyfs.search.runner import SearchResult
from fuzzyfs.utils import ensure_directory, mean_and_median, write_json
from fuzzyfs.validation.utils import validate_run_summary
from fuzzyfs.version import __version__

BATCH_METRICS = ("rmse", "std", "mae", "mape", "tic", "n_f", "r_f", "Z", "power")
"""Metrics aggregated over the seeds of a batch."""


def best_metrics(result: SearchResult) -> Dict:
    """Metrics of the best subset of a run."""
    best = result.best
    metrics = best.metrics.to_dict()
    metrics.update(
        n_f=best.n_f,
        r_f=selected_ratio(best.n_f, result.n_x),
        Z=best.z,
        power=best.power,
    )
    return metrics


def run_summary(result: SearchResult, config: RunConfig, dataset_name: str) -> Dict:
    """Summary of one seeded run, free of timestamps."""
    best = dict(best_metrics(result))
    best.update(
        mask="".join(str(bit) for bit in result.best.mask),
        features=result.selected_features,
    )
    summary = {
        "version": __version__,
        "mode": result.mode,
        "seed": result.seed,
        "dataset": dataset_name,
        "n_x": result.n_x,
        "n_hidden": result.n_hidden,
        "config": {k: v for k, v in config.to_dict().items() if k != "seeds"},
        "best": best,
        "convergence_iteration": result.convergence_iteration,
        "iterations": len(result.trace),
        "evaluations": result.evaluations,
        "distinct_subsets": result.distinct_subsets,
        "probabilities": result.probabilities,
        "model": result.best.model.to_dict(),
    }
    if result.mode == "multi":
        summary["pareto"] = result.archive
    return summary


def trace_frame(result: SearchResult) -> pd.DataFrame:
    """Per-iteration trace as a data frame."""
    columns = list(TRACE_COLUMNS)
    if result.mode == "multi":
        columns.append("archive_size")
    return pd.DataFrame(result.trace, columns=columns)


def write_run(
    result: SearchResult, config: RunConfig, dataset_name: str, out: str
) -> List[str]:
    """Write the trace, the validated summary and the Pareto front of a run.

    :returns: Paths of the written files.
    """
    ensure_directory(out)
    paths = []
    trace_path = os.path.join(out, "trace_{}.csv".format(result.seed))
    trace_frame(result).to_csv(trace_path, index=False, float_format="%.6g")
    paths.append(trace_path)

    summary = run_summary(result, config, dataset_name)
    validate_run_summary(summary)
    summary_path = os.path.join(out, "summary_{}.json".format(result.seed))
    write_json(summary_path, summary)
    paths.append(summary_path)

    if result.mode == "multi":
        pareto_csv = os.path.join(out, "pareto_{}.csv".format(result.seed))
        pd.DataFrame(result.archive, columns=PARETO_COLUMNS).to_csv(
            pareto_csv, index=False, float_format="%.6g"
        )
        pareto_json = os.path.join(out, "pareto_{}.json".format(result.seed))
        write_json(pareto_json, {"seed": result.seed, "front": result.archive})
        paths.extend([pareto_csv, pareto_json])
    logging.info("Seed {} artifacts written to {}".format(result.seed, out))
    return paths


def batch_summary(results: Sequence[SearchResult]) -> Dict:
    """Mean and median of every best-subset metric over the seeds."""
    rows = [dict(best_metrics(r), seed=r.seed) for r in results]
    summary = {
        "version": __version__,
        "mode": results[0].mode if results else None,
        "seeds": [r.seed for r in results],
        "metrics": {
            name: mean_and_median([row[name] for row in rows])
            for name in BATCH_METRICS
        },
        "runs": rows,
    }
    if results and results[0].mode == "multi":
        summary["archive_n_f"] = {
            str(r.seed): sorted({entry["n_f"] for entry in r.archive})
            for r in results
        }
    return summary


def write_batch(results: Sequence[SearchResult], out: str) -> Dict:
    """Write ``batch_summary.json`` and return its content."""
    ensure_directory(out)
    summary = batch_summary(results)
    write_json(os.path.join(out, "batch_summary.json"), summary)
    return summary


def load_trace(path: str) -> pd.DataFrame:
    """Read a trace CSV written by :func:`write_run`."""
    return pd.read_csv(path)
