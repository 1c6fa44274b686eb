# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Pytest configuration for fuzzyfs."""

import os

import numpy as np
import pytest

from fuzzyfs.dataset import Dataset, load_schema
from fuzzyfs.mlp import MlpModel
from fuzzyfs.objectives import (
    Evaluation,
    ObjectiveVector,
    PredictionMetrics,
    mask_key,
    power_from_objective,
    weighted_objective,
)
from fuzzyfs.run_config import RunConfig
from fuzzyfs.search.runner import SingleObjectiveFitness


class MaskScoreEvaluator:
    """Scores masks by their distance to a fixed subset, without training."""

    def __init__(self, n_features, wanted=(0, 1, 2)):
        """Prefer the features listed in ``wanted``."""
        self.n_features = n_features
        self.target = np.zeros(n_features, dtype=int)
        self.target[list(wanted)] = 1
        self.calls = 0
        self.seen = set()

    def score(self, mask):
        """Evaluation of one mask."""
        key = mask_key(mask)
        rmse = 1.0 + float(np.sum(np.abs(np.array(key) - self.target)))
        metrics = PredictionMetrics(
            rmse=rmse, std=rmse / 2, mae=rmse, mape=None, tic=0.1, mean_error=0.0
        )
        n_f = sum(key)
        z = weighted_objective(metrics, n_f, self.n_features)
        return Evaluation(
            mask=key,
            metrics=metrics,
            objectives=ObjectiveVector(n_f=n_f, rmse=rmse, std=rmse / 2),
            z=z,
            power=power_from_objective(z),
            model=MlpModel(np.zeros((n_f, 1)), [0.0], [0.0], [0.0]),
        )

    def evaluate_many(self, masks):
        """Score every mask."""
        masks = list(masks)
        self.calls += len(masks)
        self.seen.update(mask_key(m) for m in masks)
        return [self.score(m) for m in masks]


@pytest.fixture()
def make_mask_fitness():
    """Factory of single objective fitness models scored without training."""

    def _make(n_features=8, wanted=(0, 1, 2)):
        return SingleObjectiveFitness(MaskScoreEvaluator(n_features, wanted))

    return _make


@pytest.fixture()
def mask_fitness(make_mask_fitness):
    """Single objective fitness over 8 features preferring the first three."""
    return make_mask_fitness()


@pytest.fixture()
def toy_csv(tmp_path):
    """Minimal well formed CSV with two features and a target."""
    path = tmp_path / "toy.csv"
    path.write_text("a,b,y\n1.0,2.0,3.0\n4.0,5.0,6.0\n")
    return str(path)


@pytest.fixture()
def bodyfat_dataset():
    """Synthetic 13-feature dataset driven by three of the features."""
    rng = np.random.default_rng(7)
    n = 60
    X = rng.normal(size=(n, 13))
    y = 20.0 + 3.0 * X[:, 0] + 2.0 * X[:, 5] - 1.5 * X[:, 6] + rng.normal(0, 0.3, n)
    return Dataset(
        X=X,
        y=y,
        feature_names=load_schema("johnson")["features"],
        name="synthetic",
    )


@pytest.fixture()
def bodyfat_csv(tmp_path, bodyfat_dataset):
    """The synthetic dataset written as CSV."""
    from fuzzyfs.dataset import save_csv

    path = tmp_path / "johnson.csv"
    save_csv(bodyfat_dataset, str(path))
    return str(path)


@pytest.fixture()
def small_config(tmp_path):
    """Fast run settings."""
    return RunConfig(
        iterations=4,
        n_imp=2,
        n_col=6,
        tw=2,
        epochs=15,
        learning_rate=0.05,
        out=str(tmp_path / "results"),
    )


@pytest.fixture()
def johnson_csv():
    """Path to the real Johnson data, skipping when unavailable."""
    path = os.getenv("FUZZYFS_JOHNSON_CSV")
    if not path or not os.path.isfile(path):
        pytest.skip("FUZZYFS_JOHNSON_CSV not set")
    return path


@pytest.fixture()
def nhanes_csv():
    """Path to the real NHANES data, skipping when unavailable."""
    path = os.getenv("FUZZYFS_NHANES_CSV")
    if not path or not os.path.isfile(path):
        pytest.skip("FUZZYFS_NHANES_CSV not set")
    return path
