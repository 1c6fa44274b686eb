# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.
"""Fuzzy adaptive search operators."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.special import expit

from fuzzyfs.config import DEFAULT_ALPHA, POSITION_BOUNDS, VELOCITY_LIMIT
from fuzzyfs.fuzzy.engine import RuleBase, infer
from fuzzyfs.search.state import (
    SearchState,
    Stream,
    candidate_rng,
    repair_mask,
    roulette_pick,
)


def transfer(u):
    """V-shaped transfer function ``2 |sigmoid(8 u) - 0.5|``, equal to ``tanh(4 |u|)``.

    Maps a velocity or position change to a bit flip probability. In double
    precision the value saturates at exactly 1.0 once ``|u|`` exceeds about
    4.6, so such a change always flips its bit.
    """
    return 2.0 * np.abs(expit(8.0 * np.asarray(u, dtype=float)) - 0.5)


def avlf_bounds(
    position: np.ndarray,
    global_position: np.ndarray,
    t: int,
    alpha: float = DEFAULT_ALPHA,
    bounds: Tuple[float, float] = POSITION_BOUNDS,
) -> np.ndarray:
    """Per-dimension velocity bound shrinking with distance and time.

    ``alpha (Var_max - Var_min) / Var_max |P_global - P| / t``, capped at
    the global velocity limit. Zero where the position equals the global
    best.
    """
    low, high = bounds
    span = (high - low) / high
    bound = alpha * span * np.abs(global_position - position) / max(t, 1)
    return np.minimum(bound, VELOCITY_LIMIT)


def move(
    position: np.ndarray,
    velocity: np.ndarray,
    bound: np.ndarray,
    bounds: Tuple[float, float] = POSITION_BOUNDS,
) -> Tuple[np.ndarray, np.ndarray]:
    """Clip ``velocity`` to ``bound``, step and keep the position in range.

    Components pushed outside the position box are clamped and their
    velocity reversed.
    """
    velocity = np.clip(velocity, -bound, bound)
    new_position = position + velocity
    low, high = bounds
    outside = (new_position < low) | (new_position > high)
    new_position = np.clip(new_position, low, high)
    velocity = np.where(outside, -velocity, velocity)
    return new_position, velocity


def flip_mask(
    mask: np.ndarray, change: np.ndarray, rng: np.random.Generator
) -> np.ndarray:
    """Flip each bit with probability ``transfer(change)``, never emptying."""
    flips = rng.random(mask.size) < transfer(change)
    flipped = np.where(flips, 1 - mask, mask).astype(int)
    return repair_mask(flipped, change)


def closeness(power_a: float, power_b: float, global_power: float) -> float:
    """Power gap relative to the global best, clamped to ``[0, 1]``."""
    if global_power <= 0.0:
        return 0.0
    return float(min(abs(power_a - power_b) / global_power, 1.0))


def np_indicators(state: SearchState, index: int) -> Dict[str, float]:
    """Closeness indicators ``NP1..NP4`` and ``NIT`` of one candidate.

    A colony reports its gaps to its imperialist and its personal best,
    plus its imperialist's gaps to the global best and its personal best.
    An imperialist reports its own gaps and the mean of its colonies' gaps.
    """
    candidates = state.candidates
    gb = state.global_best.power
    empire = state.empire_of(index)
    imperialist = candidates[empire.imperialist]

    def colony_gaps(i):
        colony = candidates[i]
        return (
            closeness(imperialist.power, colony.power, gb),
            closeness(colony.best_power, colony.power, gb),
        )

    if index == empire.imperialist:
        gaps = [colony_gaps(i) for i in empire.colonies] or [(0.0, 0.0)]
        np1 = float(np.mean([g[0] for g in gaps]))
        np2 = float(np.mean([g[1] for g in gaps]))
    else:
        np1, np2 = colony_gaps(index)
    return {
        "NP1": np1,
        "NP2": np2,
        "NP3": closeness(gb, imperialist.power, gb),
        "NP4": closeness(imperialist.best_power, imperialist.power, gb),
        "NIT": state.nit,
    }


@dataclass
class Move:
    """A proposed new position, velocity and mask for one candidate."""

    index: int
    position: np.ndarray
    velocity: np.ndarray
    mask: np.ndarray


def update_bests(state: SearchState, fitness) -> None:
    """Refresh personal bests, then the global best."""
    for candidate in state.candidates:
        if fitness.improves(candidate):
            candidate.remember()
    fitness.update_global(state)


def commit(state: SearchState, fitness, moves: List[Move]) -> None:
    """Evaluate all moves together, then apply them."""
    if not moves:
        return
    evaluations = fitness.evaluate([m.mask for m in moves])
    for m, evaluation in zip(moves, evaluations):
        candidate = state.candidates[m.index]
        candidate.position = m.position
        candidate.velocity = m.velocity
        candidate.mask = m.mask
        candidate.evaluation = evaluation
    fitness.assign(state)
    update_bests(state, fitness)


def _finish_move(state, candidate, velocity, rng, alpha) -> Move:
    bound = avlf_bounds(
        candidate.position, state.global_best.position, state.t, alpha
    )
    position, velocity = move(candidate.position, velocity, bound)
    mask = flip_mask(candidate.mask, velocity, rng)
    return Move(candidate.index, position, velocity, mask)


def faglva_step(
    state: SearchState, fis1: RuleBase, fitness, alpha: float = DEFAULT_ALPHA
) -> int:
    """Global-learning velocity adaptation.

    Colonies are drawn towards their imperialist and their personal best,
    imperialists towards the global best and their personal best. Each
    candidate takes part with probability ``PFAGLVA``.

    :returns: Number of candidates moved.
    """
    gb = state.global_best
    probability = state.probabilities["PFAGLVA"]
    moves = []
    for candidate in state.candidates:
        rng = candidate_rng(state.seed, state.t, candidate.index, Stream.GLVA)
        if rng.random() > probability:
            continue
        params = infer(fis1, np_indicators(state, candidate.index))
        d = candidate.position.size
        r1, r2 = rng.random(d), rng.random(d)
        own_best = candidate.best_position - candidate.position
        if state.is_imperialist(candidate.index):
            velocity = (
                params["beta2"] * r1 * (gb.position - candidate.position)
                + params["c2"] * r2 * own_best
            )
        else:
            imperialist = state.candidates[state.empire_of(candidate.index).imperialist]
            velocity = (
                params["beta1"] * r1 * (imperialist.position - candidate.position)
                + params["c1"] * r2 * own_best
            )
        moves.append(_finish_move(state, candidate, velocity, rng, alpha))
    commit(state, fitness, moves)
    return len(moves)


def faudvd_step(
    state: SearchState, fis2: RuleBase, fitness, alpha: float = DEFAULT_ALPHA
) -> int:
    """Universal-diversity velocity divergence.

    Colonies learn from the personal best of another colony of their
    empire, imperialists and the global best holder from the personal best
    of another imperialist. Donors are chosen by power-deficit roulette.
    Candidates without a possible donor are skipped.

    :returns: Number of candidates moved.
    """
    probability = state.probabilities["PFAUDVD"]
    powers = {c.index: c.power for c in state.candidates}
    imperialists = state.imperialists
    moves = []
    for candidate in state.candidates:
        rng = candidate_rng(state.seed, state.t, candidate.index, Stream.UDVD)
        if rng.random() > probability:
            continue
        weights = infer(fis2, np_indicators(state, candidate.index))
        if candidate.index == state.global_best.index:
            omega = weights["w3"]
            members = imperialists
        elif state.is_imperialist(candidate.index):
            omega = weights["w2"]
            members = imperialists
        else:
            omega = weights["w1"]
            members = state.empire_of(candidate.index).colonies
        donor = roulette_pick(
            rng, members, [powers[m] for m in members], exclude=candidate.index
        )
        if donor is None:
            continue
        r = rng.random(candidate.position.size)
        pull = state.candidates[donor].best_position - candidate.position
        velocity = omega * (candidate.velocity + r * pull)
        moves.append(_finish_move(state, candidate, velocity, rng, alpha))
    commit(state, fitness, moves)
    return len(moves)


def _weakest(indices, powers) -> int:
    return min(indices, key=lambda i: (powers[i], i))


def _triple(rng, pool) -> Optional[Tuple[int, int, int]]:
    if len(pool) < 3:
        return None
    picked = rng.choice(np.asarray(pool), size=3, replace=False)
    return tuple(int(i) for i in picked)


def edels_indicators(
    state: SearchState,
    imperialist: int,
    colony_base: Optional[int],
    worst_colony: Optional[int],
    imperialist_base: Optional[int],
    worst_imperialist: Optional[int],
) -> Dict[str, float]:
    """Closeness indicators ``NP5..NP8`` of the local search bases.

    Indicators of a skipped branch are zero.
    """
    powers = {c.index: c.power for c in state.candidates}
    gb = state.global_best.power
    indicators = {"NP5": 0.0, "NP6": 0.0, "NP7": 0.0, "NP8": 0.0, "NIT": state.nit}
    if colony_base is not None:
        indicators["NP5"] = closeness(powers[imperialist], powers[colony_base], gb)
        indicators["NP6"] = closeness(powers[colony_base], powers[worst_colony], gb)
    if imperialist_base is not None:
        indicators["NP7"] = closeness(gb, powers[imperialist_base], gb)
        indicators["NP8"] = closeness(
            powers[imperialist_base], powers[worst_imperialist], gb
        )
    return indicators


def crossover(
    mutant: np.ndarray,
    base_velocity: np.ndarray,
    rate: float,
    rng: np.random.Generator,
) -> np.ndarray:
    """Binomial crossover with one guaranteed mutant component."""
    d = mutant.size
    forced = int(rng.integers(d))
    take = rng.random(d) <= rate
    take[forced] = True
    return np.where(take, mutant, base_velocity)


def _trial(state, base, mutant, rng, alpha) -> Move:
    candidate = state.candidates[base]
    velocity = crossover(
        mutant, candidate.velocity, state.probabilities["PFAEDELs"], rng
    )
    bound = avlf_bounds(
        candidate.position, state.global_best.position, state.t, alpha
    )
    position, velocity = move(candidate.position, velocity, bound)
    change = position - candidate.position
    flips = rng.random(change.size) < transfer(change)
    mask = np.where(flips, 1 - candidate.mask, candidate.mask).astype(int)
    return Move(base, position, velocity, repair_mask(mask, velocity))


def faedels_step(
    state: SearchState, fis3: RuleBase, fitness, alpha: float = DEFAULT_ALPHA
) -> int:
    """Differential-evolution local search inside every empire.

    Each empire takes part with probability ``PFAEDELs``. Three distinct
    colonies other than the weakest one build a colony mutant; three
    imperialists other than the weakest one build an imperialist mutant.
    A trial replaces its base (the third pick) only if it is fitter.

    :returns: Number of bases replaced.
    """
    probability = state.probabilities["PFAEDELs"]
    powers = {c.index: c.power for c in state.candidates}
    positions = {c.index: c.position for c in state.candidates}
    gb = state.global_best
    imperialists = state.imperialists
    trials = []
    for e, empire in enumerate(state.empires):
        rng = candidate_rng(
            state.seed, state.t, len(state.candidates) + e, Stream.EDELS
        )
        if rng.random() > probability:
            continue
        worst_colony = _weakest(empire.colonies, powers)
        colonies = _triple(rng, [i for i in empire.colonies if i != worst_colony])
        worst_imperialist = _weakest(imperialists, powers)
        rivals = _triple(rng, [i for i in imperialists if i != worst_imperialist])
        if colonies is None and rivals is None:
            continue
        factors = infer(
            fis3,
            edels_indicators(
                state,
                empire.imperialist,
                colonies[2] if colonies else None,
                worst_colony,
                rivals[2] if rivals else None,
                worst_imperialist,
            ),
        )
        if colonies is not None:
            r1, r2, r3 = colonies
            mutant = (
                factors["F1"] * (positions[r1] - positions[r2])
                + factors["F2"] * (positions[empire.imperialist] - positions[r3])
                + factors["F3"] * (positions[r3] - positions[worst_colony])
            )
            trials.append(_trial(state, r3, mutant, rng, alpha))
        if rivals is not None:
            r1, r2, r3 = rivals
            mutant = (
                factors["F4"] * (positions[r1] - positions[r2])
                + factors["F5"] * (gb.position - positions[r3])
                + factors["F6"] * (positions[r3] - positions[worst_imperialist])
            )
            trials.append(_trial(state, r3, mutant, rng, alpha))
    if not trials:
        return 0

    replaced = 0
    evaluations = fitness.evaluate([trial.mask for trial in trials])
    for trial, evaluation in zip(trials, evaluations):
        base = state.candidates[trial.index]
        trial_power = fitness.trial_power(
            state, trial.index, evaluation, trial.position
        )
        if trial_power > base.power:
            base.position = trial.position
            base.velocity = trial.velocity
            base.mask = trial.mask
            base.evaluation = evaluation
            fitness.assign(state)
            replaced += 1
    update_bests(state, fitness)
    logging.debug(
        "Iteration {}: {} of {} local search trials kept".format(
            state.t, replaced, len(trials)
        )
    )
    return replaced
