# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.
"""Multi-objective search: domination ranks, spread deviation fitness, archive."""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np
from pymoo.util.nds.non_dominated_sorting import NonDominatedSorting
from scipy.spatial.distance import cdist

from fuzzyfs.config import EPSILON, SSD_NEIGHBOURS
from fuzzyfs.dataset import Dataset, selected_names
from fuzzyfs.objectives import CandidateEvaluator, Evaluation, ObjectiveVector
from fuzzyfs.run_config import RunConfig
from fuzzyfs.search.runner import (
    SearchResult,
    convergence_iteration,
    make_evaluator,
    prepare_data,
    search,
)
from fuzzyfs.search.state import Candidate, GlobalBest, SearchState

N_OBJECTIVES = 3
"""Number of minimized objectives ``(n_f, RMSE, STD)``."""


def _as_array(vector) -> np.ndarray:
    if isinstance(vector, ObjectiveVector):
        return np.asarray(vector.as_tuple(), dtype=float)
    return np.asarray(vector, dtype=float)


def dominates(a, b) -> bool:
    """Whether ``a`` is no worse than ``b`` everywhere and better somewhere."""
    a, b = _as_array(a), _as_array(b)
    return bool(np.all(a <= b) and np.any(a < b))


def nondominated_sort(vectors: Sequence) -> np.ndarray:
    """Domination rank of every vector, 1 for the non-dominated front."""
    if len(vectors) == 0:
        return np.zeros(0, dtype=int)
    points = np.array([_as_array(v) for v in vectors], dtype=float)
    fronts = NonDominatedSorting().do(points)
    ranks = np.zeros(len(points), dtype=int)
    for rank, front in enumerate(fronts, start=1):
        ranks[front] = rank
    return ranks


def normalize_objectives(vectors: Sequence) -> np.ndarray:
    """Min-max scale each objective over the given vectors.

    Objectives that do not vary become 0.
    """
    points = np.atleast_2d(np.array([_as_array(v) for v in vectors], dtype=float))
    if points.size == 0:
        return points
    low, high = points.min(axis=0), points.max(axis=0)
    span = high - low
    scaled = np.zeros_like(points)
    varying = span > 0
    scaled[:, varying] = (points[:, varying] - low[varying]) / span[varying]
    return scaled


def _ssd_all(points: np.ndarray, k: int) -> np.ndarray:
    n = points.shape[0]
    if n < 2:
        return np.zeros(n)
    distances = cdist(points, points)
    pairs = distances[np.triu_indices(n, 1)]
    spread = pairs.max() - pairs.min()
    neighbours = min(k, n - 1)
    values = np.empty(n)
    for i in range(n):
        others = np.delete(distances[i], i)
        mu = np.sum((others - spread) ** 2) / (n - 1)
        nearest = np.sort(others)[:neighbours]
        crowding = np.sum(spread / np.maximum(nearest, EPSILON))
        values[i] = math.sqrt(mu + crowding)
    return values


def ssd(points, i: int, k: int = SSD_NEIGHBOURS) -> float:
    """Spatial spread deviation of member ``i`` within one rank.

    The central moment of its distances around the rank's distance range,
    plus the range divided by the distance to each of its ``k`` nearest
    neighbours.
    """
    return float(_ssd_all(np.atleast_2d(np.asarray(points, dtype=float)), k)[i])


def ssdr(
    points, ranks: Sequence[int], dimension: int, k: int = SSD_NEIGHBOURS
) -> np.ndarray:
    """Spread deviation within each rank plus ``(rank - 1) * dimension``."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    ranks = np.asarray(ranks, dtype=int)
    values = np.zeros(ranks.size)
    for rank in np.unique(ranks):
        members = np.flatnonzero(ranks == rank)
        values[members] = _ssd_all(points[members], k) + (rank - 1) * dimension
    return values


def mo_power(ssdr_os: float, ssdr_ds: float) -> float:
    """Reciprocal of the summed spread deviations, guarded at zero."""
    total = ssdr_os + ssdr_ds
    return 1.0 / EPSILON if total <= EPSILON else 1.0 / total


def population_powers(
    objectives: Sequence, positions: Sequence[np.ndarray]
) -> Tuple[np.ndarray, np.ndarray]:
    """Domination ranks and multi-objective powers of a population.

    Objective space distances use min-max scaled objectives, decision
    space distances the continuous positions.
    """
    ranks = nondominated_sort(objectives)
    positions = np.asarray(positions, dtype=float)
    os_values = ssdr(normalize_objectives(objectives), ranks, N_OBJECTIVES)
    ds_values = ssdr(positions, ranks, positions.shape[1])
    powers = np.array([mo_power(a, b) for a, b in zip(os_values, ds_values)])
    return ranks, powers


@dataclass(frozen=True)
class ArchiveEntry:
    """A non-dominated subset kept in the archive."""

    mask: Tuple[int, ...]
    position: np.ndarray
    objectives: ObjectiveVector
    evaluation: Evaluation = None

    def to_row(self, feature_names: Sequence[str] = None) -> Dict:
        """Serializable form with the mask as a 0/1 string."""
        row = {
            "mask": "".join(str(bit) for bit in self.mask),
            "n_f": self.objectives.n_f,
            "rmse": self.objectives.rmse,
            "std": self.objectives.std,
        }
        if feature_names is not None:
            row["features"] = selected_names(feature_names, self.mask)
        return row


class ParetoArchive:
    """Bounded record of the first front found so far."""

    def __init__(self, capacity: int):
        """Initialize an empty archive holding at most ``capacity`` entries."""
        self.capacity = max(1, int(capacity))
        self.entries: List[ArchiveEntry] = []

    def __len__(self):
        """Number of entries."""
        return len(self.entries)

    def crowding(self) -> np.ndarray:
        """Summed objective and decision space spread deviation per entry."""
        if not self.entries:
            return np.zeros(0)
        ranks = np.ones(len(self.entries), dtype=int)
        objectives = normalize_objectives([e.objectives for e in self.entries])
        positions = np.array([e.position for e in self.entries], dtype=float)
        return ssdr(objectives, ranks, N_OBJECTIVES) + ssdr(
            positions, ranks, positions.shape[1]
        )

    def update(self, candidates: Sequence[ArchiveEntry]) -> "ParetoArchive":
        """Merge ``candidates`` and restore the archive invariants.

        Dominated entries are dropped, a mask already archived is not added
        again, and the most crowded entry is removed until the archive fits.
        """
        pool = list(self.entries)
        seen = {e.mask for e in pool}
        for entry in candidates:
            if entry.mask not in seen:
                pool.append(entry)
                seen.add(entry.mask)
        self.entries = [
            e
            for e in pool
            if not any(dominates(o.objectives, e.objectives) for o in pool)
        ]
        while len(self.entries) > self.capacity:
            del self.entries[int(np.argmax(self.crowding()))]
        return self

    def to_rows(self, feature_names: Sequence[str] = None) -> List[Dict]:
        """Entries as rows sorted by ``(n_f, rmse, std)``."""
        rows = [e.to_row(feature_names) for e in self.entries]
        return sorted(rows, key=lambda r: (r["n_f"], r["rmse"], r["std"], r["mask"]))


def archive_update(archive: ParetoArchive, state: SearchState, ranks) -> ParetoArchive:
    """Merge the rank 1 candidates of ``state`` into ``archive``."""
    front = [
        ArchiveEntry(
            mask=tuple(int(b) for b in c.mask),
            position=c.position.copy(),
            objectives=c.objectives,
            evaluation=c.evaluation,
        )
        for c, rank in zip(state.candidates, ranks)
        if rank == 1
    ]
    return archive.update(front)


class MultiObjectiveFitness:
    """Power from domination rank and spread deviation in both spaces."""

    def __init__(self, evaluator: CandidateEvaluator, archive: ParetoArchive):
        """Initialize the fitness model."""
        self.evaluator = evaluator
        self.archive = archive
        self.ranks = np.zeros(0, dtype=int)

    def evaluate(self, masks) -> List[Evaluation]:
        """Train and score every mask."""
        return self.evaluator.evaluate_many(masks)

    def assign(self, state: SearchState) -> None:
        """Re-rank the population and recompute every power."""
        self.ranks, powers = population_powers(
            [c.objectives for c in state.candidates],
            [c.position for c in state.candidates],
        )
        for candidate, value in zip(state.candidates, powers):
            candidate.power = float(value)

    def improves(self, candidate: Candidate) -> bool:
        """Domination first, power when neither dominates."""
        if candidate.best_evaluation is None:
            return True
        new, old = candidate.objectives, candidate.best_evaluation.objectives
        if dominates(new, old):
            return True
        if dominates(old, new):
            return False
        return candidate.power > candidate.best_power

    def update_global(self, state: SearchState) -> None:
        """Lead with the currently most powerful candidate."""
        best = max(state.candidates, key=lambda c: (c.power, -c.index))
        state.global_best = GlobalBest(
            index=best.index,
            position=best.position.copy(),
            mask=best.mask.copy(),
            power=best.power,
            evaluation=best.evaluation,
        )

    def trial_power(
        self,
        state: SearchState,
        base: int,
        evaluation: Evaluation,
        position: np.ndarray,
    ) -> float:
        """Power of a trial ranked in the population in place of ``base``."""
        objectives = [c.objectives for c in state.candidates]
        positions = [c.position for c in state.candidates]
        objectives[base] = evaluation.objectives
        positions[base] = position
        _, powers = population_powers(objectives, positions)
        return float(powers[base])

    def end_iteration(self, state: SearchState) -> Dict:
        """Archive the current first front."""
        archive_update(self.archive, state, self.ranks)
        return {"archive_size": len(self.archive)}


def run_multi(config: RunConfig, dataset: Dataset, seed: int) -> SearchResult:
    """Multi-objective search for a front of ``(n_f, RMSE, STD)`` trade-offs."""
    logging.info(
        "Starting multi objective run on {} with seed {}".format(dataset.name, seed)
    )
    data = prepare_data(config, dataset, seed)
    evaluator = make_evaluator(config, data, seed)
    archive = ParetoArchive(config.population // 2)
    fitness = MultiObjectiveFitness(evaluator, archive)
    state, trace = search(config, seed, dataset.n_features, fitness)
    best = state.global_best
    logging.info(
        "Seed {} finished: archive of {} subsets with n_f {}".format(
            seed,
            len(archive),
            sorted({e.objectives.n_f for e in archive.entries}),
        )
    )
    return SearchResult(
        seed=seed,
        mode="multi",
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
        archive=archive.to_rows(dataset.feature_names),
    )
