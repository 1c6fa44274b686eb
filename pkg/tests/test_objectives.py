# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""fuzzyfs objective and fitness tests."""

import math
from unittest.mock import patch

import numpy as np
import pytest

from fuzzyfs.dataset import normalize, split
from fuzzyfs.errors import FuzzyFSEmptyMaskError, FuzzyFSValidationError
from fuzzyfs.mlp import TrainConfig, train
from fuzzyfs.objectives import (
    CandidateEvaluator,
    PredictionMetrics,
    compute_metrics,
    evaluate_candidate,
    mask_key,
    mask_seed,
    power,
    power_from_objective,
    ratio_power,
    selected_ratio,
    weighted_objective,
)


def _metrics(rmse, std):
    return PredictionMetrics(
        rmse=rmse, std=std, mae=rmse, mape=None, tic=0.0, mean_error=0.0
    )


def test_metrics_perfect_prediction():
    """Test metrics of a zero-error prediction."""
    metrics = compute_metrics([1.0, 2.0], [1.0, 2.0])
    assert metrics.rmse == 0.0
    assert metrics.std == 0.0
    assert metrics.mae == 0.0
    assert metrics.tic == 0.0
    assert metrics.mape == 0.0


def test_metrics_symmetric_errors():
    """Test metrics of errors [2, -2]."""
    metrics = compute_metrics([3.0, -1.0], [1.0, 1.0])
    assert metrics.rmse == pytest.approx(2.0)
    assert metrics.mean_error == pytest.approx(0.0)
    assert metrics.std == pytest.approx(2.0)
    assert metrics.mae == pytest.approx(2.0)
    assert metrics.mape == pytest.approx((2.0 / 3.0 + 2.0) / 2.0)
    assert metrics.tic == pytest.approx(2.0 / (math.sqrt(5.0) + 1.0))


def test_metrics_pure_bias():
    """Test a constant error has zero standard deviation."""
    metrics = compute_metrics([2.0, 2.0], [1.0, 1.0])
    assert metrics.rmse == pytest.approx(1.0)
    assert metrics.mean_error == pytest.approx(1.0)
    assert metrics.std == pytest.approx(0.0)


def test_metrics_zero_target():
    """Test MAPE is undefined for a zero target."""
    assert compute_metrics([0.0, 2.0], [1.0, 1.0]).mape is None


def test_metrics_error_decomposition():
    """Test RMSE squared splits into STD squared plus the squared mean error."""
    rng = np.random.default_rng(11)
    for _ in range(1000):
        n = int(rng.integers(1, 40))
        targets = rng.uniform(5.0, 45.0, n)
        predictions = targets + rng.normal(rng.uniform(-3, 3), rng.uniform(0.1, 5), n)
        metrics = compute_metrics(targets, predictions)
        assert metrics.rmse**2 == pytest.approx(
            metrics.std**2 + metrics.mean_error**2, abs=1e-9
        )
        assert metrics.rmse >= 0.0 and metrics.mae >= 0.0 and metrics.tic >= 0.0


def test_metrics_length_mismatch():
    """Test targets and predictions must match in length."""
    with pytest.raises(FuzzyFSValidationError):
        compute_metrics([1.0, 2.0], [1.0])


@pytest.mark.parametrize(
    "rmse, std, n_f, n_x, expected",
    [
        (3.967, 3.956, 5, 13, 4.91864),
        (0.0, 0.0, 1, 13, 0.0),
        (1.0, 0.0, 13, 13, 1.52),
    ],
)
def test_weighted_objective(rmse, std, n_f, n_x, expected):
    """Test the weighted objective."""
    assert weighted_objective(_metrics(rmse, std), n_f, n_x) == pytest.approx(
        expected
    )


@pytest.mark.parametrize(
    "z, expected",
    [(4.91864, 0.203308), (1.0, 1.0), (0.0, 1e12)],
)
def test_power_from_objective(z, expected):
    """Test fitness is the guarded reciprocal of the objective."""
    assert power_from_objective(z) == pytest.approx(expected, rel=1e-5)


def test_dataset_constant_form_agrees():
    """Test the per-dataset constant form gives the same fitness."""
    metrics = _metrics(3.967, 3.956)
    for n_f in range(1, 14):
        assert ratio_power(metrics, n_f, 13) == pytest.approx(power(metrics, n_f, 13))


@pytest.mark.parametrize("n_f", [0, 14])
def test_objective_rejects_counts(n_f):
    """Test selected counts outside [1, n_x]."""
    with pytest.raises(FuzzyFSValidationError):
        weighted_objective(_metrics(1.0, 1.0), n_f, 13)


def test_selected_ratio():
    """Test the selected feature ratio in percent."""
    assert selected_ratio(5, 13) == pytest.approx(38.4615, rel=1e-5)


def test_mask_seed():
    """Test training seeds depend on the mask and the master seed."""
    assert mask_key([1, 0, 2]) == (1, 0, 1)
    assert mask_seed(1, [1, 0, 1]) == mask_seed(1, (1, 0, 1))
    assert mask_seed(1, [1, 0, 1]) != mask_seed(1, [1, 1, 0])
    assert mask_seed(1, [1, 0, 1]) != mask_seed(2, [1, 0, 1])


@pytest.fixture()
def split_data(bodyfat_dataset):
    """Standardized 70/30 split of the synthetic dataset."""
    return normalize(split(bodyfat_dataset, 0.7, 1))


def test_evaluate_candidate(split_data):
    """Test scoring a subset trains on the selected columns only."""
    mask = [1] * 13
    config = TrainConfig(epochs=20, seed=5)
    evaluation = evaluate_candidate(mask, split_data, 10, config)
    assert evaluation.n_f == 13
    assert evaluation.model.n_inputs == 13
    assert evaluation.power == pytest.approx(1.0 / evaluation.z)
    again = evaluate_candidate(mask, split_data, 10, config)
    assert again.power == evaluation.power

    mask = [1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1]
    subset = evaluate_candidate(mask, split_data, 4, config)
    assert subset.n_f == 5
    assert subset.model.n_inputs == 5


def test_evaluate_candidate_empty_mask(split_data):
    """Test an empty subset cannot be scored."""
    with pytest.raises(FuzzyFSEmptyMaskError):
        evaluate_candidate([0] * 13, split_data, 4, TrainConfig(epochs=5))


@pytest.mark.parametrize("workers", [1, 3])
def test_candidate_evaluator_cache(split_data, workers):
    """Test each distinct mask is trained once, whatever the thread count."""
    evaluator = CandidateEvaluator(
        split_data, 4, TrainConfig(epochs=10), seed=3, workers=workers
    )
    rng = np.random.default_rng(0)
    masks = [rng.integers(0, 2, 13) for _ in range(4)]
    for mask in masks:
        mask[0] = 1
    first = evaluator.evaluate_many(masks + masks[:2])
    assert evaluator.calls == 6
    assert evaluator.cache_size == len({mask_key(m) for m in masks})
    assert first[4] is first[0]

    sequential = CandidateEvaluator(split_data, 4, TrainConfig(epochs=10), seed=3)
    for mask, evaluation in zip(masks, first):
        assert sequential.evaluate(mask).power == evaluation.power


def test_candidate_evaluator_trains_distinct_masks_once(split_data):
    """Test repeated masks never retrain the MLP."""
    evaluator = CandidateEvaluator(split_data, 4, TrainConfig(epochs=5), seed=1)
    mask = [1, 0, 1] + [0] * 10
    with patch("fuzzyfs.objectives.train", wraps=train) as trainer:
        evaluator.evaluate_many([mask, mask, [1] * 13])
        evaluator.evaluate(mask)
    assert trainer.call_count == 2
