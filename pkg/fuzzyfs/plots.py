# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.
"""Gnuplot-ready data files from run artifacts."""

import logging
import os
from typing import List

import numpy as np
import pandas as pd

from fuzzyfs.errors import FuzzyFSArtifactError

CONVERGENCE_COLUMNS = ["iter", "best_power", "Z", "rmse", "n_f"]
FRONT_COLUMNS = ["n_f", "rmse", "std"]


def _read(path: str) -> pd.DataFrame:
    if not os.path.isfile(path):
        raise FuzzyFSArtifactError("Run artifact {} is missing.".format(path))
    return pd.read_csv(path)


def _write(path: str, frame: pd.DataFrame, columns: List[str]) -> str:
    values = frame[columns].to_numpy(dtype=float).reshape(-1, len(columns))
    np.savetxt(path, values, fmt="%.10g", header=" ".join(columns), comments="# ")
    return path


def emit_plot_data(out: str, seed: int, mode: str = "single") -> List[str]:
    """Write ``convergence_<seed>.dat`` and, for multi runs, ``front_<seed>.dat``.

    Files are whitespace delimited with a ``#`` header line. The front is
    only read for ``mode == "multi"``, whatever else lies in ``out``.

    :raises FuzzyFSArtifactError: The run's trace or Pareto CSV does not exist.
    """
    trace = _read(os.path.join(out, "trace_{}.csv".format(seed)))
    paths = [
        _write(
            os.path.join(out, "convergence_{}.dat".format(seed)),
            trace,
            CONVERGENCE_COLUMNS,
        )
    ]
    if mode == "multi":
        pareto_path = os.path.join(out, "pareto_{}.csv".format(seed))
        paths.append(
            _write(
                os.path.join(out, "front_{}.dat".format(seed)),
                _read(pareto_path),
                FRONT_COLUMNS,
            )
        )
    logging.info("Plot data for seed {} written to {}".format(seed, out))
    return paths
