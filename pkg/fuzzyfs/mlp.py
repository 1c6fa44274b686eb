# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.
"""One hidden layer perceptron regressor used to score feature subsets."""

import math
from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np

from fuzzyfs.config import (
    MLP_EPOCHS,
    MLP_INIT_RANGE,
    MLP_LEARNING_RATE,
    MLP_MOMENTUM,
)
from fuzzyfs.errors import FuzzyFSTrainingError, FuzzyFSValidationError

PARAMETERS = ("W1", "b1", "W2", "b2")
"""Parameter names, in serialization order."""


def _round_half_up(value: float) -> int:
    return int(math.floor(value + 0.5))


def hidden_size(n_inputs: int, n_outputs: int = 1, c: float = 6.0) -> int:
    """Hidden layer width ``round(round(sqrt(n_inputs + n_outputs)) + c)``.

    Halves round up, so ``(41, 1, 8.5)`` gives 15.
    """
    if n_inputs < 1 or n_outputs < 1 or c < 0:
        raise FuzzyFSValidationError(
            "Invalid hidden size arguments ({}, {}, {}).".format(n_inputs, n_outputs, c)
        )
    base = _round_half_up(math.sqrt(n_inputs + n_outputs))
    return max(1, _round_half_up(base + c))


@dataclass(frozen=True)
class TrainConfig:
    """Full-batch gradient descent settings."""

    epochs: int = MLP_EPOCHS
    learning_rate: float = MLP_LEARNING_RATE
    momentum: float = MLP_MOMENTUM
    init_range: float = MLP_INIT_RANGE
    seed: int = 0

    def __post_init__(self):
        """Check the settings."""
        if self.epochs < 1:
            raise FuzzyFSValidationError("MLP epochs must be at least 1.")
        if not self.learning_rate > 0:
            raise FuzzyFSValidationError("MLP learning rate must be positive.")
        if not 0.0 <= self.momentum < 1.0:
            raise FuzzyFSValidationError("MLP momentum must lie in [0, 1).")
        if not self.init_range > 0:
            raise FuzzyFSValidationError("MLP init range must be positive.")


@dataclass
class MlpModel:
    """Weights of a ``n_inputs -> n_hidden (tanh) -> 1`` network."""

    W1: np.ndarray
    b1: np.ndarray
    W2: np.ndarray
    b2: np.ndarray
    loss_history: List[float] = field(default_factory=list)

    def __post_init__(self):
        """Coerce parameters to float arrays and check shapes."""
        self.W1 = np.atleast_2d(np.asarray(self.W1, dtype=float))
        self.b1 = np.asarray(self.b1, dtype=float).reshape(-1)
        self.W2 = np.asarray(self.W2, dtype=float).reshape(-1)
        self.b2 = np.asarray(self.b2, dtype=float).reshape(1)
        n_hidden = self.W1.shape[1]
        if self.b1.shape != (n_hidden,) or self.W2.shape != (n_hidden,):
            raise FuzzyFSValidationError("Inconsistent MLP parameter shapes.")

    @property
    def n_inputs(self) -> int:
        """Input width."""
        return self.W1.shape[0]

    @property
    def n_hidden(self) -> int:
        """Hidden layer width."""
        return self.W1.shape[1]

    def parameters(self) -> Dict[str, np.ndarray]:
        """Parameter arrays by name."""
        return {name: getattr(self, name) for name in PARAMETERS}

    def copy(self) -> "MlpModel":
        """Deep copy of the parameters and loss history."""
        return MlpModel(
            *(getattr(self, name).copy() for name in PARAMETERS),
            loss_history=list(self.loss_history),
        )

    def to_dict(self) -> Dict:
        """JSON serializable form of the weights."""
        serialized = {name: getattr(self, name).tolist() for name in PARAMETERS}
        serialized.update(n_inputs=self.n_inputs, n_hidden=self.n_hidden)
        return serialized


def _forward(model: MlpModel, X: np.ndarray):
    hidden = np.tanh(X @ model.W1 + model.b1)
    return hidden, hidden @ model.W2 + model.b2[0]


def _as_batch(model: MlpModel, X) -> np.ndarray:
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X.reshape(1, -1)
    if X.shape[1] != model.n_inputs:
        raise FuzzyFSValidationError(
            "Expected rows of width {}, got {}.".format(model.n_inputs, X.shape[1])
        )
    return X


def predict(model: MlpModel, X) -> np.ndarray:
    """Predict one value per row of ``X``.

    :raises FuzzyFSValidationError: Row width differs from ``n_inputs``.
    """
    return _forward(model, _as_batch(model, X))[1]


def mse(model: MlpModel, X, y) -> float:
    """Mean squared error of ``model`` on ``(X, y)``."""
    residual = predict(model, X) - np.asarray(y, dtype=float)
    return float(np.mean(residual**2))


def gradient(model: MlpModel, X, y) -> Dict[str, np.ndarray]:
    """Backpropagated gradients of the batch mean squared error."""
    X = _as_batch(model, X)
    y = np.asarray(y, dtype=float).reshape(-1)
    if X.shape[0] == 0:
        raise FuzzyFSValidationError("Cannot differentiate an empty batch.")
    hidden, prediction = _forward(model, X)
    d_prediction = 2.0 * (prediction - y) / X.shape[0]
    d_pre_activation = np.outer(d_prediction, model.W2) * (1.0 - hidden**2)
    return {
        "W1": X.T @ d_pre_activation,
        "b1": d_pre_activation.sum(axis=0),
        "W2": hidden.T @ d_prediction,
        "b2": np.array([d_prediction.sum()]),
    }


def initialize(
    n_inputs: int, n_hidden: int, config: TrainConfig, y_mean: float = 0.0
) -> MlpModel:
    """Seeded uniform initialization in ``[-init_range, init_range]``.

    The output bias starts at ``y_mean``.
    """
    rng = np.random.default_rng(config.seed)
    bound = config.init_range
    return MlpModel(
        W1=rng.uniform(-bound, bound, size=(n_inputs, n_hidden)),
        b1=rng.uniform(-bound, bound, size=n_hidden),
        W2=rng.uniform(-bound, bound, size=n_hidden),
        b2=np.array([y_mean]),
    )


def train(X, y, n_hidden: int, config: TrainConfig = None) -> MlpModel:
    """Fit an MLP with full-batch gradient descent and momentum.

    The parameters with the lowest training loss seen are returned, so the
    final loss never exceeds the initial one.

    :param X: Training rows.
    :param y: Training targets.
    :param n_hidden: Hidden layer width.
    :param config: Trainer settings, defaults to :class:`TrainConfig`.
    :raises FuzzyFSTrainingError: The loss became non-finite.
    """
    config = config or TrainConfig()
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float).reshape(-1)
    if X.ndim != 2 or X.shape[0] == 0 or X.shape[0] != y.shape[0]:
        raise FuzzyFSValidationError("Training data must be a non-empty matrix.")
    if n_hidden < 1:
        raise FuzzyFSValidationError("Hidden layer width must be at least 1.")

    model = initialize(X.shape[1], n_hidden, config, y_mean=float(np.mean(y)))
    velocity = {name: np.zeros_like(p) for name, p in model.parameters().items()}
    history = []
    best, best_loss = model.copy(), math.inf
    for epoch in range(config.epochs + 1):
        loss = mse(model, X, y)
        if not np.isfinite(loss):
            raise FuzzyFSTrainingError(
                "loss became non-finite at epoch {} (learning rate {} too "
                "high?)".format(epoch, config.learning_rate)
            )
        history.append(loss)
        if loss < best_loss:
            best, best_loss = model.copy(), loss
        if epoch == config.epochs:
            break
        for name, grad in gradient(model, X, y).items():
            velocity[name] = (
                config.momentum * velocity[name] - config.learning_rate * grad
            )
            setattr(model, name, getattr(model, name) + velocity[name])
    best.loss_history = history
    return best
