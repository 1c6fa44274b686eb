# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.
"""Single objective feature selection runs."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import numpy as np

from fuzzyfs.dataset import Dataset, SplitDataset, normalize, selected_names, split
from fuzzyfs.fuzzy.rulebases import build_all
from fuzzyfs.objectives import CandidateEvaluator, Evaluation
from fuzzyfs.run_config import RunConfig
from fuzzyfs.search.controller import faos_update
from fuzzyfs.search.operators import faedels_step, faglva_step, faudvd_step
from fuzzyfs.search.state import (
    Candidate,
    GlobalBest,
    SearchState,
    initialize,
    swap_pass,
)


class SingleObjectiveFitness:
    """Power is the reciprocal of the weighted objective ``Z``."""

    def __init__(self, evaluator: CandidateEvaluator):
        """Initialize the fitness model."""
        self.evaluator = evaluator

    def evaluate(self, masks: Sequence[np.ndarray]) -> List[Evaluation]:
        """Train and score every mask."""
        return self.evaluator.evaluate_many(masks)

    def assign(self, state: SearchState) -> None:
        """Copy each candidate's evaluated power."""
        for candidate in state.candidates:
            candidate.power = candidate.evaluation.power

    def improves(self, candidate: Candidate) -> bool:
        """Whether the current state beats the personal best."""
        return candidate.power > candidate.best_power

    def update_global(self, state: SearchState) -> None:
        """Keep the best personal best ever seen."""
        best = max(state.candidates, key=lambda c: (c.best_power, -c.index))
        if state.global_best is None or best.best_power > state.global_best.power:
            state.global_best = GlobalBest(
                index=best.index,
                position=best.best_position.copy(),
                mask=best.best_mask.copy(),
                power=best.best_power,
                evaluation=best.best_evaluation,
            )

    def trial_power(
        self,
        state: SearchState,
        base: int,
        evaluation: Evaluation,
        position: np.ndarray,
    ) -> float:
        """Power a local search trial would have."""
        return evaluation.power

    def end_iteration(self, state: SearchState) -> Dict:
        """Nothing to maintain between iterations."""
        return {}


@dataclass
class SearchResult:
    """Outcome of one seeded run."""

    seed: int
    mode: str
    best: Evaluation
    best_position: np.ndarray
    feature_names: List[str]
    selected_features: List[str]
    trace: List[Dict]
    convergence_iteration: int
    n_hidden: int
    evaluations: int
    distinct_subsets: int
    probabilities: Dict[str, float]
    archive: List = field(default_factory=list)

    @property
    def n_x(self) -> int:
        """Number of candidate features."""
        return len(self.feature_names)


def prepare_data(config: RunConfig, dataset: Dataset, seed: int) -> SplitDataset:
    """Seeded split of ``dataset`` with train-based standardization."""
    return normalize(split(dataset, config.ratio, seed))


def make_evaluator(
    config: RunConfig, data: SplitDataset, seed: int
) -> CandidateEvaluator:
    """Cached MLP evaluator configured from ``config``."""
    return CandidateEvaluator(
        data,
        n_hidden=config.n_hidden(data.n_features),
        train_config=config.train_config(),
        seed=seed,
        beta=config.beta,
        gamma=config.gamma,
        workers=config.workers,
    )


def trace_row(state: SearchState) -> Dict:
    """Trace entry describing the global best after an iteration."""
    best = state.global_best.evaluation
    return {
        "iter": state.t,
        "best_power": state.global_best.power,
        "Z": best.z,
        "rmse": best.metrics.rmse,
        "std": best.metrics.std,
        "n_f": best.n_f,
        "p_glva": state.probabilities["PFAGLVA"],
        "p_udvd": state.probabilities["PFAUDVD"],
        "p_edels": state.probabilities["PFAEDELs"],
    }


def convergence_iteration(trace: Sequence[Dict]) -> int:
    """First iteration at which the final best power was reached."""
    if not trace:
        return 0
    final = trace[-1]["best_power"]
    for row in trace:
        if row["best_power"] == final:
            return row["iter"]
    return trace[-1]["iter"]


def search(
    config: RunConfig, seed: int, n_features: int, fitness
) -> Tuple[SearchState, List[Dict]]:
    """Run the evolutionary loop with the given fitness model.

    Each iteration applies global learning, universal diversity and the
    local search in that order, then the colony/imperialist swap pass.
    Every ``tw`` iterations the operator probabilities are re-selected.
    """
    fis = build_all()
    state = initialize(
        seed,
        config.n_imp,
        config.n_col,
        n_features,
        fitness,
        max_iterations=config.iterations,
    )
    trace = []
    for t in range(1, config.iterations + 1):
        state.t = t
        faglva_step(state, fis["fis1"], fitness, config.alpha)
        faudvd_step(state, fis["fis2"], fitness, config.alpha)
        faedels_step(state, fis["fis3"], fitness, config.alpha)
        swap_pass(state)
        extra = fitness.end_iteration(state)
        state.window.append(state.global_best.power)
        row = trace_row(state)
        row.update(extra)
        trace.append(row)
        logging.debug(
            "Seed {} iteration {}: best power {:.6f}, n_f {}".format(
                seed, t, row["best_power"], row["n_f"]
            )
        )
        if t % config.tw == 0 and len(state.window) >= config.tw:
            faos_update(state, fis["fis4"])
    return state, trace


def run_single(config: RunConfig, dataset: Dataset, seed: int) -> SearchResult:
    """Single objective search for the fittest feature subset.

    :param config: Run settings.
    :param dataset: Full dataset, split and standardized per seed.
    :param seed: Master seed; fixes split, population and training.
    """
    logging.info(
        "Starting single objective run on {} with seed {}".format(dataset.name, seed)
    )
    data = prepare_data(config, dataset, seed)
    evaluator = make_evaluator(config, data, seed)
    state, trace = search(
        config, seed, dataset.n_features, SingleObjectiveFitness(evaluator)
    )
    best = state.global_best
    result = SearchResult(
        seed=seed,
        mode="single",
        best=best.evaluation,
        best_position=best.position,
        feature_names=list(dataset.feature_names),
        selected_features=selected_names(dataset.feature_names, best.mask),
        trace=trace,
        convergence_iteration=convergence_iteration(trace),
        n_hidden=evaluator.n_hidden,
        evaluations=evaluator.calls,
        distinct_subsets=evaluator.cache_size,
        probabilities=dict(state.probabilities),
    )
    logging.info(
        "Seed {} finished: power {:.6f}, RMSE {:.4f}, {} features ({})".format(
            seed,
            best.power,
            best.evaluation.metrics.rmse,
            best.evaluation.n_f,
            ", ".join(result.selected_features),
        )
    )
    return result
