# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.
"""Prediction metrics and fitness of candidate feature subsets."""

import logging
import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sklearn.metrics import mean_absolute_error, mean_squared_error

from fuzzyfs.config import DEFAULT_BETA, DEFAULT_GAMMA, EPSILON, FUZZYFS_WORKERS
from fuzzyfs.dataset import SplitDataset, project_split
from fuzzyfs.errors import FuzzyFSEmptyMaskError, FuzzyFSValidationError
from fuzzyfs.mlp import MlpModel, TrainConfig, predict, train


@dataclass(frozen=True)
class PredictionMetrics:
    """Error statistics of a prediction against its targets."""

    rmse: float
    std: float
    mae: float
    mape: Optional[float]
    tic: float
    mean_error: float

    def to_dict(self) -> Dict:
        """Metrics by name."""
        return {
            "rmse": self.rmse,
            "std": self.std,
            "mae": self.mae,
            "mape": self.mape,
            "tic": self.tic,
        }


@dataclass(frozen=True)
class ObjectiveVector:
    """Minimized objectives ``(n_f, RMSE, STD)``."""

    n_f: int
    rmse: float
    std: float

    def as_tuple(self) -> Tuple[float, float, float]:
        """Objectives as a plain tuple."""
        return (float(self.n_f), self.rmse, self.std)


def compute_metrics(targets, predictions) -> PredictionMetrics:
    """RMSE, STD, MAE, MAPE and Theil's inequality coefficient.

    Errors are ``targets - predictions``; STD is the population standard
    deviation of the errors. MAPE is a fraction and ``None`` when a target
    is zero.
    """
    t = np.asarray(targets, dtype=float).reshape(-1)
    f = np.asarray(predictions, dtype=float).reshape(-1)
    if t.shape != f.shape or t.size == 0:
        raise FuzzyFSValidationError(
            "Targets and predictions must have the same non-zero length."
        )
    errors = t - f
    rmse = math.sqrt(mean_squared_error(t, f))
    if np.any(t == 0):
        mape = None
    else:
        mape = float(np.mean(np.abs(errors / t)))
    denominator = math.sqrt(np.mean(t**2)) + math.sqrt(np.mean(f**2))
    tic = 0.0 if rmse == 0.0 else rmse / denominator
    return PredictionMetrics(
        rmse=rmse,
        std=float(np.std(errors)),
        mae=float(mean_absolute_error(t, f)),
        mape=mape,
        tic=tic,
        mean_error=float(np.mean(errors)),
    )


def _check_counts(n_f: int, n_x: int):
    if not 1 <= n_f <= n_x:
        raise FuzzyFSValidationError(
            "Selected feature count {} outside [1, {}].".format(n_f, n_x)
        )


def weighted_objective(
    metrics: PredictionMetrics,
    n_f: int,
    n_x: int,
    beta: float = DEFAULT_BETA,
    gamma: float = DEFAULT_GAMMA,
) -> float:
    """Weighted objective ``Z = RMSE (1 + beta n_x r_f) + gamma STD``."""
    _check_counts(n_f, n_x)
    r_f = n_f / n_x
    return metrics.rmse * (1.0 + beta * n_x * r_f) + gamma * metrics.std


def power_from_objective(z: float) -> float:
    """Reciprocal fitness, ``1 / EPSILON`` when ``z`` vanishes."""
    return 1.0 / EPSILON if z <= EPSILON else 1.0 / z


def power(
    metrics: PredictionMetrics,
    n_f: int,
    n_x: int,
    beta: float = DEFAULT_BETA,
    gamma: float = DEFAULT_GAMMA,
) -> float:
    """Fitness of a subset, higher is fitter."""
    return power_from_objective(weighted_objective(metrics, n_f, n_x, beta, gamma))


def ratio_power(
    metrics: PredictionMetrics,
    n_f: int,
    n_x: int,
    beta: float = DEFAULT_BETA,
    gamma: float = DEFAULT_GAMMA,
) -> float:
    """Fitness written with the per-dataset constant ``beta * n_x``.

    Johnson data (``n_x = 13``) gives ``1 / (RMSE (1 + 0.52 r_f) + 0.04 STD)``.
    Agrees with :func:`power` up to round-off.
    """
    _check_counts(n_f, n_x)
    constant = beta * n_x
    z = metrics.rmse * (1.0 + constant * (n_f / n_x)) + gamma * metrics.std
    return power_from_objective(z)


def selected_ratio(n_f: int, n_x: int) -> float:
    """Selected feature ratio ``r_f`` in percent."""
    return 100.0 * n_f / n_x


@dataclass(frozen=True)
class Evaluation:
    """Outcome of training and testing an MLP on one feature subset."""

    mask: Tuple[int, ...]
    metrics: PredictionMetrics
    objectives: ObjectiveVector
    z: float
    power: float
    model: MlpModel

    @property
    def n_f(self) -> int:
        """Number of selected features."""
        return self.objectives.n_f


def mask_key(mask: Sequence[int]) -> Tuple[int, ...]:
    """Hashable form of a mask."""
    return tuple(int(bool(bit)) for bit in mask)


def mask_seed(seed: int, mask: Sequence[int]) -> int:
    """Training seed derived from the master seed and the mask bits."""
    key = mask_key(mask)
    as_int = int("".join(str(bit) for bit in key), 2)
    return int(np.random.SeedSequence([seed, as_int, len(key)]).generate_state(1)[0])


def evaluate_candidate(
    mask: Sequence[int],
    data: SplitDataset,
    n_hidden: int,
    train_config: TrainConfig,
    beta: float = DEFAULT_BETA,
    gamma: float = DEFAULT_GAMMA,
) -> Evaluation:
    """Train on the selected train columns and score on the test partition.

    :raises FuzzyFSEmptyMaskError: ``mask`` selects nothing.
    """
    key = mask_key(mask)
    if not any(key):
        raise FuzzyFSEmptyMaskError()
    projected = project_split(data, key)
    model = train(projected.train.X, projected.train.y, n_hidden, train_config)
    metrics = compute_metrics(projected.test.y, predict(model, projected.test.X))
    n_f = sum(key)
    n_x = data.n_features
    z = weighted_objective(metrics, n_f, n_x, beta, gamma)
    return Evaluation(
        mask=key,
        metrics=metrics,
        objectives=ObjectiveVector(n_f=n_f, rmse=metrics.rmse, std=metrics.std),
        z=z,
        power=power_from_objective(z),
        model=model,
    )


class CandidateEvaluator:
    """Evaluate masks with a per-mask cache and an optional thread pool.

    Training is seeded from ``(seed, mask)``, so a mask always receives the
    same evaluation within a run and caching does not change results.
    """

    def __init__(
        self,
        data: SplitDataset,
        n_hidden: int,
        train_config: TrainConfig = None,
        seed: int = 0,
        beta: float = DEFAULT_BETA,
        gamma: float = DEFAULT_GAMMA,
        workers: int = FUZZYFS_WORKERS,
    ):
        """Initialize the evaluator."""
        self.data = data
        self.n_hidden = n_hidden
        self.train_config = train_config or TrainConfig()
        self.seed = seed
        self.beta = beta
        self.gamma = gamma
        self.workers = max(1, int(workers))
        self._cache = {}
        self._lock = threading.Lock()
        self.calls = 0

    @property
    def n_features(self) -> int:
        """Number of candidate features."""
        return self.data.n_features

    @property
    def cache_size(self) -> int:
        """Number of distinct masks evaluated so far."""
        return len(self._cache)

    def _compute(self, key: Tuple[int, ...]) -> Evaluation:
        config = replace(self.train_config, seed=mask_seed(self.seed, key))
        return evaluate_candidate(
            key, self.data, self.n_hidden, config, self.beta, self.gamma
        )

    def evaluate(self, mask: Sequence[int]) -> Evaluation:
        """Evaluate a single mask."""
        return self.evaluate_many([mask])[0]

    def evaluate_many(self, masks: Iterable[Sequence[int]]) -> List[Evaluation]:
        """Evaluate masks, training each distinct uncached mask once."""
        keys = [mask_key(mask) for mask in masks]
        with self._lock:
            self.calls += len(keys)
            pending = [k for k in dict.fromkeys(keys) if k not in self._cache]
        if pending:
            if self.workers > 1 and len(pending) > 1:
                with ThreadPoolExecutor(max_workers=self.workers) as pool:
                    results = list(pool.map(self._compute, pending))
            else:
                results = [self._compute(key) for key in pending]
            with self._lock:
                self._cache.update(zip(pending, results))
            logging.debug(
                "Trained {} new subsets ({} cached)".format(
                    len(pending), len(self._cache)
                )
            )
        return [self._cache[key] for key in keys]
