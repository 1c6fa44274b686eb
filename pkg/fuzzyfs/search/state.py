# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.
"""Population, empires and search state."""

import enum
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from fuzzyfs.config import DEFAULT_OPERATOR_PROBABILITY, MASK_THRESHOLD
from fuzzyfs.errors import FuzzyFSValidationError
from fuzzyfs.objectives import Evaluation


class Stream(enum.IntEnum):
    """Identifiers of the independent random streams of a run."""

    INIT = 0
    GLVA = 1
    UDVD = 2
    EDELS = 3
    EMPIRES = 4


def candidate_rng(seed: int, t: int, index: int, stream: Stream) -> np.random.Generator:
    """Random generator keyed by ``(seed, iteration, index, stream)``.

    Draws made for one candidate never depend on the order in which other
    candidates are processed.
    """
    return np.random.default_rng(np.random.SeedSequence([seed, t, index, int(stream)]))


@dataclass
class Candidate:
    """A country: continuous position, velocity and its binary mask."""

    index: int
    position: np.ndarray
    velocity: np.ndarray
    mask: np.ndarray
    evaluation: Evaluation = None
    power: float = 0.0
    best_position: np.ndarray = None
    best_mask: np.ndarray = None
    best_power: float = -np.inf
    best_evaluation: Evaluation = None

    @property
    def objectives(self):
        """Current objective vector."""
        return self.evaluation.objectives

    def remember(self):
        """Make the current state the personal best."""
        self.best_position = self.position.copy()
        self.best_mask = self.mask.copy()
        self.best_power = self.power
        self.best_evaluation = self.evaluation


@dataclass(frozen=True)
class GlobalBest:
    """Snapshot of the best country found so far."""

    index: int
    position: np.ndarray
    mask: np.ndarray
    power: float
    evaluation: Evaluation


@dataclass
class Empire:
    """An imperialist and the colonies it rules, by candidate index."""

    imperialist: int
    colonies: List[int] = field(default_factory=list)


def default_probabilities() -> Dict[str, float]:
    """Initial application probability of every operator."""
    return {
        "PFAGLVA": DEFAULT_OPERATOR_PROBABILITY,
        "PFAUDVD": DEFAULT_OPERATOR_PROBABILITY,
        "PFAEDELs": DEFAULT_OPERATOR_PROBABILITY,
    }


@dataclass
class SearchState:
    """Everything the operators read and update during a run."""

    seed: int
    candidates: List[Candidate]
    empires: List[Empire]
    global_best: Optional[GlobalBest] = None
    probabilities: Dict[str, float] = field(default_factory=default_probabilities)
    t: int = 0
    max_iterations: int = 1
    window: List[float] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        """Number of features ``d``."""
        return self.candidates[0].position.size

    @property
    def nit(self) -> float:
        """Normalized iteration time ``t / max_iterations``."""
        return min(max(self.t / self.max_iterations, 0.0), 1.0)

    @property
    def imperialists(self) -> List[int]:
        """Imperialist indices, one per empire."""
        return [empire.imperialist for empire in self.empires]

    def empire_of(self, index: int) -> Empire:
        """The empire ``index`` belongs to."""
        for empire in self.empires:
            if empire.imperialist == index or index in empire.colonies:
                return empire
        raise FuzzyFSValidationError("Candidate {} has no empire.".format(index))

    def is_imperialist(self, index: int) -> bool:
        """Whether ``index`` rules an empire."""
        return index in self.imperialists


def derive_mask(position: np.ndarray) -> np.ndarray:
    """Initial mask: bit set where the position reaches the threshold."""
    return (position >= MASK_THRESHOLD).astype(int)


def repair_mask(mask: np.ndarray, velocity: np.ndarray) -> np.ndarray:
    """Restore the bit with the largest absolute velocity if none is set."""
    if mask.any():
        return mask
    repaired = mask.copy()
    repaired[int(np.argmax(np.abs(velocity)))] = 1
    return repaired


def roulette_weights(powers: Sequence[float]) -> np.ndarray:
    """Selection probabilities ``1 - deficit / sum(deficit)``, normalized.

    The deficit of a member is the gap between the best power and its own.
    Equal powers give a uniform distribution.
    """
    powers = np.asarray(powers, dtype=float)
    deficits = powers.max() - powers
    total = deficits.sum()
    if total <= 0.0:
        return np.full(powers.size, 1.0 / powers.size)
    weights = 1.0 - deficits / total
    if weights.sum() <= 0.0:
        return np.full(powers.size, 1.0 / powers.size)
    return weights / weights.sum()


def roulette_pick(
    rng: np.random.Generator,
    members: Sequence[int],
    powers: Sequence[float],
    exclude: int,
) -> Optional[int]:
    """Pick a member other than ``exclude`` by power-deficit roulette.

    :returns: The chosen index, or ``None`` when no other member exists.
    """
    pool = [(m, p) for m, p in zip(members, powers)]
    weights = roulette_weights([p for _, p in pool])
    keep = np.array([m != exclude for m, _ in pool])
    if not keep.any():
        return None
    weights = np.where(keep, weights, 0.0)
    if weights.sum() <= 0.0:
        weights = keep.astype(float)
    weights = weights / weights.sum()
    return int(pool[int(rng.choice(len(pool), p=weights))][0])


def form_empires(
    candidates: Sequence[Candidate], n_imp: int, rng: np.random.Generator
) -> List[Empire]:
    """Split the population into ``n_imp`` empires.

    The fittest candidates become imperialists. Colonies are distributed by
    roulette on the imperialists' powers, then empires left without a
    colony take one from the largest empire.
    """
    if not 1 <= n_imp < len(candidates):
        raise FuzzyFSValidationError(
            "Need at least one colony per imperialist ({} imperialists, {} "
            "candidates).".format(n_imp, len(candidates))
        )
    order = sorted(range(len(candidates)), key=lambda i: (-candidates[i].power, i))
    empires = [Empire(imperialist=candidates[i].index) for i in order[:n_imp]]
    probabilities = roulette_weights([candidates[i].power for i in order[:n_imp]])
    for i in order[n_imp:]:
        empires[int(rng.choice(n_imp, p=probabilities))].colonies.append(
            candidates[i].index
        )
    for empire in empires:
        if not empire.colonies:
            donor = max(empires, key=lambda e: len(e.colonies))
            empire.colonies.append(donor.colonies.pop())
    for empire in empires:
        empire.colonies.sort()
    return empires


def swap_pass(state: SearchState) -> int:
    """Promote any colony fitter than its imperialist.

    :returns: Number of swaps made.
    """
    swaps = 0
    powers = {c.index: c.power for c in state.candidates}
    for empire in state.empires:
        if not empire.colonies:
            continue
        best = max(empire.colonies, key=lambda i: (powers[i], -i))
        if powers[best] > powers[empire.imperialist]:
            empire.colonies.remove(best)
            empire.colonies.append(empire.imperialist)
            empire.colonies.sort()
            empire.imperialist = best
            swaps += 1
    if swaps:
        logging.debug("Iteration {}: {} colony/imperialist swaps".format(state.t, swaps))
    return swaps


def initialize(
    seed: int, n_imp: int, n_col: int, d: int, fitness, max_iterations: int = 1
) -> SearchState:
    """Random population of ``n_imp + n_col`` evaluated candidates.

    :param seed: Master seed of the run.
    :param n_imp: Number of imperialists.
    :param n_col: Number of colonies.
    :param d: Number of features.
    :param fitness: Fitness model evaluating and ranking masks.
    :param max_iterations: Iteration budget used for ``NIT``.
    :raises FuzzyFSValidationError: Invalid population sizes.
    """
    if n_imp < 1 or n_col < n_imp or d < 1:
        raise FuzzyFSValidationError(
            "Invalid population: {} imperialists, {} colonies, {} features.".format(
                n_imp, n_col, d
            )
        )
    candidates = []
    for index in range(n_imp + n_col):
        rng = candidate_rng(seed, 0, index, Stream.INIT)
        position = rng.uniform(0.0, 1.0, size=d)
        mask = derive_mask(position)
        if not mask.any():
            mask[int(rng.integers(d))] = 1
        candidates.append(
            Candidate(
                index=index,
                position=position,
                velocity=np.zeros(d),
                mask=mask,
            )
        )
    for candidate, evaluation in zip(
        candidates, fitness.evaluate([c.mask for c in candidates])
    ):
        candidate.evaluation = evaluation
    state = SearchState(
        seed=seed,
        candidates=candidates,
        empires=[],
        max_iterations=max(1, max_iterations),
    )
    fitness.assign(state)
    for candidate in candidates:
        candidate.remember()
    state.empires = form_empires(
        candidates, n_imp, candidate_rng(seed, 0, 0, Stream.EMPIRES)
    )
    fitness.update_global(state)
    return state
