# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""fuzzyfs run artifact tests."""

import json
import os
from dataclasses import replace

import numpy as np
import pytest

from fuzzyfs.config import TRACE_COLUMNS
from fuzzyfs.errors import FuzzyFSArtifactError
from fuzzyfs.pareto import run_multi
from fuzzyfs.plots import emit_plot_data
from fuzzyfs.results import (
    BATCH_METRICS,
    batch_summary,
    load_trace,
    run_summary,
    write_batch,
    write_run,
)
from fuzzyfs.search.runner import run_single


@pytest.fixture()
def single_result(small_config, bodyfat_dataset):
    """Single objective run on the synthetic dataset."""
    return run_single(small_config, bodyfat_dataset, 1)


def test_write_run(small_config, single_result, tmp_path):
    """Test the trace and summary of a single objective run."""
    out = str(tmp_path / "out")
    paths = write_run(single_result, small_config, "synthetic", out)
    assert [os.path.basename(p) for p in paths] == ["trace_1.csv", "summary_1.json"]

    trace = load_trace(paths[0])
    assert list(trace.columns) == TRACE_COLUMNS
    assert list(trace["iter"]) == [1, 2, 3, 4]

    with open(paths[1]) as f:
        summary = json.load(f)
    assert summary["seed"] == 1
    assert summary["n_x"] == 13
    assert summary["best"]["n_f"] == single_result.best.n_f
    assert len(summary["best"]["mask"]) == 13
    assert summary["best"]["features"] == single_result.selected_features
    assert "pareto" not in summary


def test_write_run_is_reproducible(small_config, bodyfat_dataset, tmp_path):
    """Test the same seed writes byte identical artifacts."""
    contents = []
    for name in ("a", "b"):
        result = run_single(small_config, bodyfat_dataset, 3)
        paths = write_run(result, small_config, "synthetic", str(tmp_path / name))
        contents.append([open(p, "rb").read() for p in paths])
    assert contents[0] == contents[1]


def test_run_summary_mode_specific(small_config, bodyfat_dataset):
    """Test multi objective summaries carry the Pareto front."""
    result = run_multi(small_config, bodyfat_dataset, 1)
    summary = run_summary(result, small_config, "synthetic")
    assert summary["mode"] == "multi"
    assert summary["pareto"] == result.archive


def test_write_multi_run_and_plots(small_config, bodyfat_dataset, tmp_path):
    """Test Pareto files and plot data of a multi objective run."""
    out = str(tmp_path / "out")
    result = run_multi(small_config, bodyfat_dataset, 1)
    paths = write_run(result, small_config, "synthetic", out)
    names = [os.path.basename(p) for p in paths]
    assert names == ["trace_1.csv", "summary_1.json", "pareto_1.csv", "pareto_1.json"]
    assert "archive_size" in load_trace(paths[0]).columns

    plots = emit_plot_data(out, 1, "multi")
    assert [os.path.basename(p) for p in plots] == ["convergence_1.dat", "front_1.dat"]
    with open(plots[0]) as f:
        assert f.readline().strip() == "# iter best_power Z rmse n_f"
    assert np.loadtxt(plots[0], ndmin=2).shape == (small_config.iterations, 5)
    assert np.loadtxt(plots[1], ndmin=2).shape == (len(result.archive), 3)


def test_emit_plot_data_single(small_config, single_result, tmp_path):
    """Test single objective runs only get a convergence file."""
    out = str(tmp_path / "out")
    write_run(single_result, small_config, "synthetic", out)
    assert [os.path.basename(p) for p in emit_plot_data(out, 1)] == [
        "convergence_1.dat"
    ]


def test_emit_plot_data_ignores_leftover_front(
    small_config, bodyfat_dataset, single_result, tmp_path
):
    """Test a single run reusing a multi run directory gets no front file."""
    out = str(tmp_path / "out")
    multi = run_multi(small_config, bodyfat_dataset, 1)
    write_run(multi, small_config, "synthetic", out)
    write_run(single_result, small_config, "synthetic", out)
    assert os.path.isfile(os.path.join(out, "pareto_1.csv"))
    plots = emit_plot_data(out, 1, "single")
    assert [os.path.basename(p) for p in plots] == ["convergence_1.dat"]
    assert not os.path.isfile(os.path.join(out, "front_1.dat"))


def test_emit_plot_data_missing_trace(tmp_path):
    """Test plotting a run that was never written."""
    with pytest.raises(FuzzyFSArtifactError):
        emit_plot_data(str(tmp_path), 1)


def test_emit_plot_data_missing_front(small_config, single_result, tmp_path):
    """Test plotting a multi objective front that was never written."""
    write_run(single_result, small_config, "synthetic", str(tmp_path))
    with pytest.raises(FuzzyFSArtifactError):
        emit_plot_data(str(tmp_path), 1, "multi")


def test_batch_summary(small_config, bodyfat_dataset, tmp_path):
    """Test mean and median over the seeds of a batch."""
    config = replace(small_config, iterations=2)
    results = [run_single(config, bodyfat_dataset, seed) for seed in (1, 2)]
    summary = write_batch(results, str(tmp_path))
    assert os.path.isfile(str(tmp_path / "batch_summary.json"))
    assert summary["seeds"] == [1, 2]
    assert set(summary["metrics"]) == set(BATCH_METRICS)
    rmse = [r.best.metrics.rmse for r in results]
    assert summary["metrics"]["rmse"]["mean"] == pytest.approx(np.mean(rmse))
    assert summary["metrics"]["rmse"]["median"] == pytest.approx(np.median(rmse))
    assert "archive_n_f" not in summary


def test_batch_summary_multi(small_config, bodyfat_dataset):
    """Test multi objective batches list the archived subset sizes."""
    result = run_multi(replace(small_config, iterations=2), bodyfat_dataset, 1)
    summary = batch_summary([result])
    assert summary["archive_n_f"]["1"] == sorted({r["n_f"] for r in result.archive})
