# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""fuzzyfs MLP regressor tests."""

import math

import numpy as np
import pytest

from fuzzyfs.errors import FuzzyFSTrainingError, FuzzyFSValidationError
from fuzzyfs.mlp import (
    MlpModel,
    TrainConfig,
    gradient,
    hidden_size,
    initialize,
    mse,
    predict,
    train,
)


@pytest.mark.parametrize(
    "n_inputs, n_outputs, c, expected",
    [(13, 1, 6, 10), (41, 1, 8.5, 15), (3, 1, 0, 2)],
)
def test_hidden_size(n_inputs, n_outputs, c, expected):
    """Test the hidden layer size rule."""
    assert hidden_size(n_inputs, n_outputs, c) == expected


def test_hidden_size_invalid():
    """Test hidden layer size arguments are validated."""
    with pytest.raises(FuzzyFSValidationError):
        hidden_size(0)


def test_predict_zero_weights():
    """Test an all-zero network predicts its output bias."""
    model = MlpModel(np.zeros((3, 2)), np.zeros(2), np.zeros(2), [1.5])
    np.testing.assert_array_equal(predict(model, np.ones((4, 3))), [1.5] * 4)


def test_predict_hand_computed():
    """Test a single hidden unit network against a hand evaluation."""
    model = MlpModel([[0.5]], [0.1], [2.0], [0.3])
    assert predict(model, [1.0])[0] == pytest.approx(2.0 * math.tanh(0.6) + 0.3)


def test_predict_keeps_row_order():
    """Test one prediction per row, in order."""
    model = MlpModel([[1.0]], [0.0], [1.0], [0.0])
    X = np.array([[0.1], [0.2], [-0.3]])
    np.testing.assert_allclose(predict(model, X), np.tanh(X[:, 0]))


def test_predict_wrong_width():
    """Test predicting rows of the wrong width."""
    model = MlpModel(np.zeros((3, 2)), np.zeros(2), np.zeros(2), [0.0])
    with pytest.raises(FuzzyFSValidationError):
        predict(model, np.ones((2, 4)))


def _batch(seed=0, rows=5, n_inputs=3):
    rng = np.random.default_rng(seed)
    return rng.normal(size=(rows, n_inputs)), rng.normal(size=rows)


@pytest.mark.parametrize("seed", range(10))
def test_gradient_matches_finite_differences(seed):
    """Test backpropagation against central finite differences."""
    rng = np.random.default_rng(100 + seed)
    n_inputs, n_hidden, rows = (int(v) for v in rng.integers(1, 9, 3))
    X, y = _batch(seed, rows, n_inputs)
    config = TrainConfig(seed=seed, init_range=float(rng.uniform(0.1, 1.0)))
    model = initialize(n_inputs, n_hidden, config, y_mean=float(rng.normal()))
    analytic = gradient(model, X, y)
    step = 1e-5
    for name, values in model.parameters().items():
        numeric = np.zeros_like(values)
        for index in np.ndindex(values.shape):
            original = values[index]
            values[index] = original + step
            plus = mse(model, X, y)
            values[index] = original - step
            minus = mse(model, X, y)
            values[index] = original
            numeric[index] = (plus - minus) / (2 * step)
        np.testing.assert_allclose(analytic[name], numeric, rtol=1e-4, atol=1e-8)


def test_gradient_zero_at_exact_fit():
    """Test gradients vanish on a zero-error batch."""
    X, _ = _batch()
    model = initialize(3, 4, TrainConfig(seed=2))
    for grad in gradient(model, X, predict(model, X)).values():
        np.testing.assert_allclose(grad, 0.0, atol=1e-12)


def test_gradient_mean_normalized():
    """Test duplicating every row leaves the gradient unchanged."""
    X, y = _batch()
    model = initialize(3, 4, TrainConfig(seed=3))
    single = gradient(model, X, y)
    double = gradient(model, np.vstack([X, X]), np.concatenate([y, y]))
    for name in single:
        np.testing.assert_allclose(single[name], double[name])


def test_train_linear_toy():
    """Test training fits a linear function."""
    x = np.linspace(-1.0, 1.0, 20)
    X, y = x.reshape(-1, 1), 2.0 * x
    config = TrainConfig(epochs=2000, learning_rate=0.05, momentum=0.9, seed=0)
    model = train(X, y, 3, config)
    assert math.sqrt(mse(model, X, y)) < 0.1
    assert len(model.loss_history) == config.epochs + 1
    assert mse(model, X, y) == pytest.approx(min(model.loss_history))
    assert min(model.loss_history) <= model.loss_history[0]


def test_train_is_deterministic():
    """Test the same seed and data give identical weights."""
    X, y = _batch(rows=12)
    config = TrainConfig(epochs=30, seed=4)
    first, second = train(X, y, 3, config), train(X, y, 3, config)
    for name, values in first.parameters().items():
        np.testing.assert_array_equal(values, second.parameters()[name])


def test_train_diverges():
    """Test a runaway learning rate aborts training."""
    x = np.linspace(-1.0, 1.0, 20)
    with pytest.raises(FuzzyFSTrainingError, match="learning rate"):
        train(
            x.reshape(-1, 1),
            1000.0 * x,
            3,
            TrainConfig(epochs=500, learning_rate=1e4, momentum=0.0),
        )


@pytest.mark.parametrize(
    "settings",
    [
        {"epochs": 0},
        {"learning_rate": 0.0},
        {"momentum": 1.0},
        {"init_range": -1.0},
    ],
)
def test_train_config_validation(settings):
    """Test trainer settings are validated."""
    with pytest.raises(FuzzyFSValidationError):
        TrainConfig(**settings)


def test_model_serialization():
    """Test the JSON form of the weights."""
    model = initialize(2, 3, TrainConfig(seed=0))
    serialized = model.to_dict()
    assert serialized["n_inputs"] == 2
    assert serialized["n_hidden"] == 3
    assert len(serialized["W1"]) == 2
    assert len(serialized["b2"]) == 1
