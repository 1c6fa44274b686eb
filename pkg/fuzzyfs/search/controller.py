# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.
"""Operator selection from the stagnation of the global best."""

import logging
from typing import Dict, Sequence

from fuzzyfs.errors import FuzzyFSValidationError
from fuzzyfs.fuzzy.engine import RuleBase, infer
from fuzzyfs.search.state import SearchState

OPERATORS = ("PFAGLVA", "PFAUDVD", "PFAEDELs")


def stagnation(window: Sequence[float]) -> float:
    """``1 - (max - min) / max`` of the global best powers in ``window``.

    1 means no progress. A non-positive maximum counts as fully stagnant.
    """
    if not window:
        raise FuzzyFSValidationError("Stagnation needs at least one power value.")
    highest, lowest = max(window), min(window)
    if highest <= 0.0:
        return 1.0
    return min(max(1.0 - (highest - lowest) / highest, 0.0), 1.0)


def faos_update(state: SearchState, fis4: RuleBase) -> Dict[str, float]:
    """Set the operator probabilities for the next time window.

    Outputs are clamped to [0, 1], not renormalized. An even mix of 0.5 is a
    fixed point: no Low or High antecedent on a probability fires there. Clears
    the window afterwards.
    """
    inputs = {"Stagnation": stagnation(state.window), "NIT": state.nit}
    inputs.update(state.probabilities)
    outputs = infer(fis4, inputs)
    previous = dict(state.probabilities)
    state.probabilities = {
        name: min(max(outputs[name], 0.0), 1.0) for name in OPERATORS
    }
    state.window = []
    logging.info(
        "Iteration {}: stagnation {:.4f}, operator probabilities {} -> {}".format(
            state.t,
            inputs["Stagnation"],
            ", ".join("{:.3f}".format(previous[n]) for n in OPERATORS),
            ", ".join("{:.3f}".format(state.probabilities[n]) for n in OPERATORS),
        )
    )
    return dict(state.probabilities)
