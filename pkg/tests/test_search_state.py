# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""fuzzyfs population and empire tests."""

import numpy as np
import pytest

from fuzzyfs.errors import FuzzyFSValidationError
from fuzzyfs.search.state import (
    Candidate,
    Empire,
    SearchState,
    Stream,
    candidate_rng,
    form_empires,
    initialize,
    repair_mask,
    roulette_pick,
    roulette_weights,
    swap_pass,
)


def _candidate(index, power, d=3):
    position = np.full(d, index / 10.0)
    return Candidate(
        index=index,
        position=position,
        velocity=np.zeros(d),
        mask=np.ones(d, dtype=int),
        power=power,
        best_position=position.copy(),
        best_mask=np.ones(d, dtype=int),
        best_power=power,
    )


def test_candidate_rng_streams():
    """Test random streams are keyed by seed, iteration, index and stream."""
    draw = candidate_rng(1, 2, 3, Stream.GLVA).random()
    assert draw == candidate_rng(1, 2, 3, Stream.GLVA).random()
    assert draw != candidate_rng(1, 2, 3, Stream.UDVD).random()
    assert draw != candidate_rng(1, 2, 4, Stream.GLVA).random()
    assert draw != candidate_rng(2, 2, 3, Stream.GLVA).random()


def test_initialize(mask_fitness):
    """Test the initial population and its empires."""
    state = initialize(1, 5, 15, 8, mask_fitness, max_iterations=10)
    assert len(state.candidates) == 20
    assert len(state.empires) == 5
    members = sorted(
        [e.imperialist for e in state.empires]
        + [c for e in state.empires for c in e.colonies]
    )
    assert members == list(range(20))
    assert all(e.colonies for e in state.empires)
    for candidate in state.candidates:
        assert candidate.mask.any()
        assert np.all((candidate.position >= 0.0) & (candidate.position <= 1.0))
        assert candidate.best_power == candidate.power
    assert state.global_best.power == max(c.power for c in state.candidates)
    imperialist_powers = [state.candidates[i].power for i in state.imperialists]
    colony_powers = [
        state.candidates[c].power for e in state.empires for c in e.colonies
    ]
    assert min(imperialist_powers) >= max(colony_powers)


def test_initialize_minimal(make_mask_fitness):
    """Test one imperialist with one colony."""
    state = initialize(4, 1, 1, 2, make_mask_fitness(2, wanted=(0,)))
    assert len(state.empires) == 1
    assert len(state.empires[0].colonies) == 1


def test_initialize_is_deterministic(make_mask_fitness):
    """Test the same seed gives the same initial state."""
    first = initialize(9, 2, 4, 8, make_mask_fitness())
    second = initialize(9, 2, 4, 8, make_mask_fitness())
    for a, b in zip(first.candidates, second.candidates):
        np.testing.assert_array_equal(a.position, b.position)
        np.testing.assert_array_equal(a.mask, b.mask)
    assert [e.colonies for e in first.empires] == [e.colonies for e in second.empires]


@pytest.mark.parametrize("n_imp, n_col", [(0, 3), (3, 2)])
def test_initialize_invalid(mask_fitness, n_imp, n_col):
    """Test invalid population sizes."""
    with pytest.raises(FuzzyFSValidationError):
        initialize(1, n_imp, n_col, 8, mask_fitness)


def test_form_empires_top_powers():
    """Test the fittest candidates become imperialists."""
    candidates = [_candidate(i, p) for i, p in enumerate([5, 4, 1, 1, 1])]
    empires = form_empires(candidates, 2, np.random.default_rng(0))
    assert [e.imperialist for e in empires] == [0, 1]
    assert sorted(c for e in empires for c in e.colonies) == [2, 3, 4]
    assert all(e.colonies for e in empires)


def test_form_empires_equal_powers():
    """Test every empire receives a colony when powers tie."""
    candidates = [_candidate(i, 1.0) for i in range(6)]
    for seed in range(10):
        empires = form_empires(candidates, 3, np.random.default_rng(seed))
        assert all(e.colonies for e in empires)


def test_form_empires_single():
    """Test a single empire holds every colony."""
    candidates = [_candidate(i, float(i)) for i in range(4)]
    empires = form_empires(candidates, 1, np.random.default_rng(0))
    assert empires[0].imperialist == 3
    assert empires[0].colonies == [0, 1, 2]


def test_roulette_weights():
    """Test power-deficit roulette probabilities."""
    np.testing.assert_allclose(roulette_weights([3, 2, 1]), [1 / 2, 1 / 3, 1 / 6])
    np.testing.assert_allclose(roulette_weights([2, 2]), [0.5, 0.5])


def test_roulette_pick():
    """Test the excluded member is never picked."""
    rng = np.random.default_rng(0)
    picks = {roulette_pick(rng, [4, 5, 6], [3, 2, 1], exclude=4) for _ in range(50)}
    assert picks == {5, 6}
    assert roulette_pick(rng, [4], [1.0], exclude=4) is None


def test_repair_mask():
    """Test an empty mask regains the bit with the largest velocity."""
    np.testing.assert_array_equal(
        repair_mask(np.zeros(3, dtype=int), np.array([0.1, -0.9, 0.3])), [0, 1, 0]
    )
    mask = np.array([1, 0, 0])
    assert repair_mask(mask, np.zeros(3)) is mask


def test_swap_pass():
    """Test a colony fitter than its imperialist takes its place."""
    candidates = [_candidate(i, p) for i, p in enumerate([2.0, 1.0, 3.0, 0.5])]
    state = SearchState(
        seed=0,
        candidates=candidates,
        empires=[Empire(0, [2, 3]), Empire(1, [])],
    )
    assert swap_pass(state) == 1
    assert state.empires[0].imperialist == 2
    assert state.empires[0].colonies == [0, 3]
    assert swap_pass(state) == 0


def test_search_state_helpers():
    """Test normalized iteration time and empire lookups."""
    candidates = [_candidate(i, 1.0) for i in range(3)]
    state = SearchState(
        seed=0, candidates=candidates, empires=[Empire(0, [1, 2])], max_iterations=4
    )
    assert state.dimension == 3
    assert state.nit == 0.0
    state.t = 4
    assert state.nit == 1.0
    assert state.empire_of(2).imperialist == 0
    assert state.is_imperialist(0)
    assert not state.is_imperialist(1)
    with pytest.raises(FuzzyFSValidationError):
        state.empire_of(7)
