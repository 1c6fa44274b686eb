# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.
"""The four rule bases tuning the search components and operator selection."""

import itertools
import logging
import os
from typing import Dict, List, Sequence, Tuple

from fuzzyfs.config import FIS_OUTPUT_RANGES
from fuzzyfs.errors import FuzzyFSArtifactError
from fuzzyfs.fuzzy.engine import (
    FuzzyRule,
    LinguisticVariable,
    Predicate,
    RuleBase,
    Term,
)

L, M, H = Term.LOW, Term.MEDIUM, Term.HIGH

_PREDICATE_OF = {L: Predicate.LOW, M: Predicate.MEDIUM, H: Predicate.HIGH}
_INVERSE = {L: H, M: M, H: L}

# Consequents of the sixteen Low/High combinations of the four closeness
# indicators, first indicator most significant.
_OMEGA_TABLE = [
    (L, L, L), (L, L, L), (L, H, L), (L, H, L),
    (L, L, L), (L, L, L), (L, H, L), (L, H, L),
    (H, L, L), (H, L, L), (H, H, L), (H, H, L),
    (H, L, L), (H, L, L), (H, H, L), (H, H, H),
]  # fmt: skip

_F_TABLE = [
    (H, H, L, H, H, L), (H, H, L, L, H, L), (H, H, L, H, L, L), (H, H, L, H, L, H),
    (L, H, H, H, H, L), (L, H, H, L, H, H), (L, H, H, H, L, L), (L, H, H, H, L, H),
    (H, L, L, H, H, L), (H, L, L, L, H, H), (L, H, H, L, H, H), (H, L, L, H, L, H),
    (H, L, H, H, H, L), (H, L, H, L, H, H), (H, L, H, H, L, L), (H, L, H, H, L, H),
]  # fmt: skip


def _binary_patterns(width: int) -> List[Tuple[Term, ...]]:
    return list(itertools.product((L, H), repeat=width))


def _variables(names: Sequence[str]) -> Tuple[LinguisticVariable, ...]:
    return tuple(LinguisticVariable(name) for name in names)


def _rule(antecedents, consequents) -> FuzzyRule:
    return FuzzyRule(tuple(antecedents), tuple(consequents))


def _indicator_rules(
    indicators: Sequence[str],
    outputs: Sequence[str],
    table: Sequence[Sequence[Term]],
    exploitation: Sequence[Term],
) -> Tuple[FuzzyRule, ...]:
    """Sixteen pattern rules, the all-Medium rule and the late-search rule."""
    rules = []
    for pattern, consequent in zip(_binary_patterns(len(indicators)), table):
        antecedents = [
            (name, _PREDICATE_OF[term]) for name, term in zip(indicators, pattern)
        ]
        antecedents.append(("NIT", Predicate.LOW_OR_MEDIUM))
        rules.append(_rule(antecedents, zip(outputs, consequent)))
    rules.append(
        _rule(
            [(name, Predicate.MEDIUM) for name in indicators]
            + [("NIT", Predicate.LOW_OR_MEDIUM)],
            [(name, M) for name in outputs],
        )
    )
    rules.append(
        _rule(
            [(name, Predicate.ANY) for name in indicators]
            + [("NIT", Predicate.HIGH)],
            zip(outputs, exploitation),
        )
    )
    return tuple(rules)


def _ranges(outputs: Sequence[str]) -> Dict[str, Tuple[float, float]]:
    return {name: FIS_OUTPUT_RANGES[name] for name in outputs}


def build_fis1() -> RuleBase:
    """Rule base tuning the global-learning velocity coefficients.

    Each coefficient follows the closeness indicator it weighs: a candidate
    far from a guide is pulled harder towards it.
    """
    indicators = ["NP1", "NP2", "NP3", "NP4"]
    outputs = ["beta1", "c1", "beta2", "c2"]
    table = _binary_patterns(4)
    return RuleBase(
        name="FIS1",
        inputs=_variables(indicators + ["NIT"]),
        outputs=_variables(outputs),
        rules=_indicator_rules(indicators, outputs, table, (L, H, L, H)),
        output_ranges=_ranges(outputs),
    )


def build_fis2() -> RuleBase:
    """Rule base tuning the universal-diversity inertia weights."""
    indicators = ["NP1", "NP2", "NP3", "NP4"]
    outputs = ["w1", "w2", "w3"]
    return RuleBase(
        name="FIS2",
        inputs=_variables(indicators + ["NIT"]),
        outputs=_variables(outputs),
        rules=_indicator_rules(indicators, outputs, _OMEGA_TABLE, (L, L, L)),
        output_ranges=_ranges(outputs),
    )


def build_fis3() -> RuleBase:
    """Rule base tuning the local-search scale factors."""
    indicators = ["NP5", "NP6", "NP7", "NP8"]
    outputs = ["F1", "F2", "F3", "F4", "F5", "F6"]
    return RuleBase(
        name="FIS3",
        inputs=_variables(indicators + ["NIT"]),
        outputs=_variables(outputs),
        rules=_indicator_rules(indicators, outputs, _F_TABLE, (L, H, L, L, H, L)),
        output_ranges=_ranges(outputs),
    )


def build_fis4() -> RuleBase:
    """Rule base choosing operator probabilities for the next time window.

    Low stagnation early on keeps the current operator mix, high stagnation
    inverts it. Late in the search the roles swap.
    """
    operators = ["PFAGLVA", "PFAUDVD", "PFAEDELs"]
    blocks = [
        (L, L, False),
        (H, L, True),
        (L, H, True),
        (H, H, False),
    ]
    rules = []
    for stagnation, nit, invert in blocks:
        for pattern in _binary_patterns(3):
            antecedents = [("Stagnation", _PREDICATE_OF[stagnation])]
            antecedents += [
                (name, _PREDICATE_OF[term]) for name, term in zip(operators, pattern)
            ]
            antecedents.append(("NIT", _PREDICATE_OF[nit]))
            consequent = [_INVERSE[term] if invert else term for term in pattern]
            rules.append(_rule(antecedents, zip(operators, consequent)))
        if (stagnation, nit) == (H, L):
            rules.append(
                _rule(
                    [
                        (name, Predicate.MEDIUM)
                        for name in ["Stagnation"] + operators + ["NIT"]
                    ],
                    [(name, M) for name in operators],
                )
            )
    return RuleBase(
        name="FIS4",
        inputs=_variables(["Stagnation"] + operators + ["NIT"]),
        outputs=_variables(operators),
        rules=tuple(rules),
        output_ranges=_ranges(operators),
    )


def build_all() -> Dict[str, RuleBase]:
    """All four rule bases, keyed by lower-case name."""
    return {
        "fis1": build_fis1(),
        "fis2": build_fis2(),
        "fis3": build_fis3(),
        "fis4": build_fis4(),
    }


def dump_rule_bases(directory: str) -> List[str]:
    """Write ``fis1.txt`` .. ``fis4.txt`` into ``directory``.

    :returns: Paths of the written files.
    :raises FuzzyFSArtifactError: The directory cannot be written.
    """
    paths = []
    try:
        os.makedirs(directory, exist_ok=True)
        for name, fis in build_all().items():
            path = os.path.join(directory, "{}.txt".format(name))
            with open(path, "w") as f:
                f.write(fis.dump())
            paths.append(path)
    except OSError as e:
        raise FuzzyFSArtifactError(
            "Cannot write rule bases to {}: {}".format(directory, e)
        )
    logging.info("Rule bases written to {}".format(directory))
    return paths
