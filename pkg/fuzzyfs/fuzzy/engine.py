# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.
"""Mamdani fuzzy inference on the unit universe."""

import enum
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import skfuzzy as fuzz

from fuzzyfs.config import FIS_UNIVERSE_POINTS, MEMBERSHIP_BREAKPOINTS
from fuzzyfs.errors import FuzzyFSConfigurationError

UNIVERSE = np.linspace(0.0, 1.0, FIS_UNIVERSE_POINTS)
"""Grid on which clipped consequents are aggregated and defuzzified."""


class Term(enum.Enum):
    """Linguistic terms, ordered by the position of their peak."""

    LOW = "Low"
    MEDIUM = "Medium"
    HIGH = "High"


class Predicate(enum.Enum):
    """Antecedent predicates allowed in a rule."""

    LOW = "Low"
    MEDIUM = "Medium"
    HIGH = "High"
    LOW_OR_MEDIUM = "LowOrMedium"
    ANY = "Any"


@dataclass(frozen=True)
class MembershipFunction:
    """Triangular membership function ``tri(a, b, c)``."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        """Check breakpoint ordering."""
        if not (self.a <= self.b <= self.c):
            raise FuzzyFSConfigurationError(
                "Triangle breakpoints must satisfy a <= b <= c, "
                "got ({}, {}, {}).".format(self.a, self.b, self.c)
            )

    def curve(self, universe: np.ndarray) -> np.ndarray:
        """Evaluate the function over ``universe``."""
        return fuzz.trimf(np.asarray(universe, dtype=float), [self.a, self.b, self.c])

    def __call__(self, value: float) -> float:
        """Membership degree of a single value."""
        return float(self.curve(np.atleast_1d(float(value)))[0])


def default_terms() -> Dict[Term, MembershipFunction]:
    """Build the Low/Medium/High partition shared by every variable."""
    return {
        term: MembershipFunction(*MEMBERSHIP_BREAKPOINTS[term.value]) for term in Term
    }


@dataclass(frozen=True)
class LinguisticVariable:
    """Named variable on ``[0, 1]`` with three linguistic terms."""

    name: str
    terms: Mapping[Term, MembershipFunction] = field(default_factory=default_terms)

    def __post_init__(self):
        """Check the terms are ordered Low < Medium < High by peak."""
        if set(self.terms) != set(Term):
            raise FuzzyFSConfigurationError(
                "Variable '{}' must define Low, Medium and High.".format(self.name)
            )
        peaks = [self.terms[term].b for term in Term]
        if peaks != sorted(peaks):
            raise FuzzyFSConfigurationError(
                "Terms of variable '{}' are not ordered by peak.".format(self.name)
            )


@dataclass(frozen=True)
class FuzzyRule:
    """If-then rule: antecedent predicates and consequent terms."""

    antecedents: Tuple[Tuple[str, Predicate], ...]
    consequents: Tuple[Tuple[str, Term], ...]

    def __post_init__(self):
        """Check the rule concludes something."""
        if not self.consequents:
            raise FuzzyFSConfigurationError("A rule needs at least one consequent.")

    def describe(self) -> str:
        """One-line human readable form of the rule."""
        lhs = " AND ".join(
            "{} is {}".format(name, predicate.value)
            for name, predicate in self.antecedents
        )
        rhs = ", ".join(
            "{} is {}".format(name, term.value) for name, term in self.consequents
        )
        return "IF {} THEN {}".format(lhs, rhs)


def fuzzify(value: float, variable: LinguisticVariable) -> Dict[Term, float]:
    """Map a crisp value to its per-term membership degrees.

    Values outside ``[0, 1]`` are clamped first.
    """
    clamped = float(np.clip(value, 0.0, 1.0))
    return {term: mf(clamped) for term, mf in variable.terms.items()}


def _predicate_degree(predicate: Predicate, degrees: Mapping[Term, float]) -> float:
    if predicate is Predicate.ANY:
        return 1.0
    if predicate is Predicate.LOW_OR_MEDIUM:
        return max(degrees[Term.LOW], degrees[Term.MEDIUM])
    return degrees[Term(predicate.value)]


def evaluate_rule(
    rule: FuzzyRule, input_degrees: Mapping[str, Mapping[Term, float]]
) -> float:
    """Firing strength of ``rule``: minimum over its antecedents.

    :param rule: The rule to evaluate.
    :param input_degrees: Fuzzified degrees by input variable name.
    :raises FuzzyFSConfigurationError: An antecedent names an unknown input.
    """
    strength = 1.0
    for name, predicate in rule.antecedents:
        if name not in input_degrees:
            raise FuzzyFSConfigurationError(
                "Rule refers to unknown input variable '{}'.".format(name)
            )
        strength = min(strength, _predicate_degree(predicate, input_degrees[name]))
    return strength


@dataclass(frozen=True)
class RuleBase:
    """Mamdani fuzzy inference system."""

    name: str
    inputs: Tuple[LinguisticVariable, ...]
    outputs: Tuple[LinguisticVariable, ...]
    rules: Tuple[FuzzyRule, ...]
    output_ranges: Mapping[str, Tuple[float, float]]

    def __post_init__(self):
        """Resolve every variable name used by the rules."""
        if not self.rules:
            raise FuzzyFSConfigurationError(
                "Rule base '{}' has no rules.".format(self.name)
            )
        input_names = self.input_names
        output_names = self.output_names
        for index, rule in enumerate(self.rules, start=1):
            for name, _ in rule.antecedents:
                if name not in input_names:
                    raise FuzzyFSConfigurationError(
                        "Rule {} of {} uses unknown input '{}'.".format(
                            index, self.name, name
                        )
                    )
            for name, _ in rule.consequents:
                if name not in output_names:
                    raise FuzzyFSConfigurationError(
                        "Rule {} of {} uses unknown output '{}'.".format(
                            index, self.name, name
                        )
                    )
        for name in output_names:
            if name not in self.output_ranges:
                raise FuzzyFSConfigurationError(
                    "Output '{}' of {} has no parameter range.".format(name, self.name)
                )

    @property
    def input_names(self) -> List[str]:
        """Input variable names, in declaration order."""
        return [variable.name for variable in self.inputs]

    @property
    def output_names(self) -> List[str]:
        """Output variable names, in declaration order."""
        return [variable.name for variable in self.outputs]

    def dump(self) -> str:
        """Render the rule table, one rule per line."""
        lines = ["# {}".format(self.name)]
        for index, rule in enumerate(self.rules, start=1):
            lines.append("R{}: {}".format(index, rule.describe()))
        return "\n".join(lines) + "\n"


def _scale(value: float, bounds: Sequence[float]) -> float:
    low, high = bounds
    return low + (high - low) * value


def infer_unit(
    fis: RuleBase, crisp_inputs: Mapping[str, float]
) -> Dict[str, Optional[float]]:
    """Run inference and return defuzzified outputs on the unit universe.

    Outputs no rule concludes about are reported as ``None``.
    """
    missing = [name for name in fis.input_names if name not in crisp_inputs]
    if missing:
        raise FuzzyFSConfigurationError(
            "Missing inputs for {}: {}".format(fis.name, ", ".join(missing))
        )
    degrees = {
        variable.name: fuzzify(crisp_inputs[variable.name], variable)
        for variable in fis.inputs
    }
    aggregated = {name: np.zeros_like(UNIVERSE) for name in fis.output_names}
    fired = {name: False for name in fis.output_names}
    outputs_by_name = {variable.name: variable for variable in fis.outputs}
    for rule in fis.rules:
        strength = evaluate_rule(rule, degrees)
        if strength <= 0.0:
            continue
        for name, term in rule.consequents:
            curve = outputs_by_name[name].terms[term].curve(UNIVERSE)
            aggregated[name] = np.fmax(aggregated[name], np.fmin(strength, curve))
            fired[name] = True
    result = {}
    for name in fis.output_names:
        if fired[name] and aggregated[name].sum() > 0.0:
            result[name] = float(fuzz.defuzz(UNIVERSE, aggregated[name], "centroid"))
        else:
            result[name] = None
    return result


def infer(fis: RuleBase, crisp_inputs: Mapping[str, float]) -> Dict[str, float]:
    """Mamdani inference with centroid defuzzification.

    Clipped consequents are aggregated by pointwise maximum, defuzzified on
    ``UNIVERSE`` and mapped onto each output's parameter range. An output
    for which no rule fires takes the midpoint of its range.

    :param fis: Rule base to evaluate.
    :param crisp_inputs: Crisp value of every input, by variable name.
    :returns: Crisp value of every output, by variable name.
    """
    unit = infer_unit(fis, crisp_inputs)
    return {
        name: _scale(0.5 if value is None else value, fis.output_ranges[name])
        for name, value in unit.items()
    }
