# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""fuzzyfs configuration."""

import logging
import os

SCHEMAS_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "schemas")
"""Directory holding the shipped JSON schemas and dataset manifests."""

run_config_schema_file_path = os.path.join(SCHEMAS_PATH, "run_config.json")
"""Run configuration schema location."""

run_summary_schema_file_path = os.path.join(SCHEMAS_PATH, "run_summary.json")
"""Run summary schema location."""

DATASET_MANIFESTS = {
    "johnson": os.path.join(SCHEMAS_PATH, "johnson.json"),
    "nhanes": os.path.join(SCHEMAS_PATH, "nhanes.json"),
}
"""Bundled dataset schema manifests, by name."""

FUZZYFS_LOG_LEVEL = logging.getLevelName(os.getenv("FUZZYFS_LOG_LEVEL", "INFO"))
"""Log verbosity level."""

FUZZYFS_LOG_FORMAT = os.getenv(
    "FUZZYFS_LOG_FORMAT",
    "%(asctime)s | %(name)s | %(threadName)s | " "%(levelname)s | %(message)s",
)
"""Log format."""

FUZZYFS_WORKERS = int(os.getenv("FUZZYFS_WORKERS", "1"))
"""Number of threads used to evaluate candidate feature subsets."""

EPSILON = 1e-12
"""Guard used wherever a reciprocal or a distance could hit zero."""

FIS_UNIVERSE_POINTS = 1001
"""Resolution of the unit universe on which consequents are defuzzified."""

MEMBERSHIP_BREAKPOINTS = {
    "Low": (0.0, 0.0, 0.5),
    "Medium": (0.0, 0.5, 1.0),
    "High": (0.5, 1.0, 1.0),
}
"""Triangular breakpoints ``(a, b, c)`` of the three linguistic terms.

Shared by every input and output variable of the four rule bases.
"""

FIS_OUTPUT_RANGES = {
    "beta1": (0.0, 2.0),
    "c1": (0.0, 2.0),
    "beta2": (0.0, 2.0),
    "c2": (0.0, 2.0),
    "w1": (0.1, 0.9),
    "w2": (0.1, 0.9),
    "w3": (0.1, 0.9),
    "F1": (0.0, 2.0),
    "F2": (0.0, 2.0),
    "F3": (0.0, 2.0),
    "F4": (0.0, 2.0),
    "F5": (0.0, 2.0),
    "F6": (0.0, 2.0),
    "PFAGLVA": (0.0, 1.0),
    "PFAUDVD": (0.0, 1.0),
    "PFAEDELs": (0.0, 1.0),
}
"""Parameter range each defuzzified output is affinely mapped to."""

POSITION_BOUNDS = (0.0, 1.0)
"""Lower and upper bound (``Var_min``, ``Var_max``) of every position."""

VELOCITY_LIMIT = 12.0
"""Absolute bound of every velocity component."""

MASK_THRESHOLD = 0.5
"""Position value from which a feature is selected at initialization."""

DEFAULT_ITERATIONS = 100
"""Maximum number of iterations."""

DEFAULT_N_IMPERIALISTS = 5
"""Number of imperialists (empires)."""

DEFAULT_N_COLONIES = 15
"""Number of colonies."""

DEFAULT_TIME_WINDOW = 10
"""Iterations between two operator-selection updates."""

DEFAULT_ALPHA = 10.0
"""Scale of the adaptive velocity limit."""

DEFAULT_BETA = 0.04
"""Weight of the selected-feature ratio in the weighted objective."""

DEFAULT_GAMMA = 0.04
"""Weight of the error standard deviation in the weighted objective."""

DEFAULT_OPERATOR_PROBABILITY = 0.5
"""Initial application probability of each search operator."""

DEFAULT_SPLIT_RATIO = 0.7
"""Fraction of the rows used for training."""

MLP_HIDDEN_OFFSETS = {13: 6.0, 41: 8.5}
"""Offset ``c`` of the hidden layer size rule, by number of features."""

MLP_DEFAULT_HIDDEN_OFFSET = 6.0
"""Offset ``c`` used for datasets not listed in ``MLP_HIDDEN_OFFSETS``."""

MLP_EPOCHS = 200
"""Full-batch gradient descent epochs."""

MLP_LEARNING_RATE = 0.01
"""Gradient descent step size."""

MLP_MOMENTUM = 0.9
"""Momentum coefficient."""

MLP_INIT_RANGE = 0.5
"""Half width of the uniform weight initialization interval."""

SSD_NEIGHBOURS = 3
"""Maximum number of nearest neighbours in the spread deviation sum."""

TRACE_COLUMNS = [
    "iter",
    "best_power",
    "Z",
    "rmse",
    "std",
    "n_f",
    "p_glva",
    "p_udvd",
    "p_edels",
]
"""Header of the convergence trace CSV."""

PARETO_COLUMNS = ["mask", "n_f", "rmse", "std"]
"""Header of the Pareto front CSV."""
