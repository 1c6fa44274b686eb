# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.
"""Fuzzy inference systems."""

from fuzzyfs.fuzzy.engine import (  # noqa: F401
    FuzzyRule,
    LinguisticVariable,
    MembershipFunction,
    Predicate,
    RuleBase,
    Term,
    evaluate_rule,
    fuzzify,
    infer,
)
from fuzzyfs.fuzzy.rulebases import (  # noqa: F401
    build_all,
    build_fis1,
    build_fis2,
    build_fis3,
    build_fis4,
    dump_rule_bases,
)
