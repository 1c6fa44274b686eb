# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.
"""Run configuration: defaults, config files and command line overrides."""

import os
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional

import yaml

from fuzzyfs.config import (
    DEFAULT_ALPHA,
    DEFAULT_BETA,
    DEFAULT_GAMMA,
    DEFAULT_ITERATIONS,
    DEFAULT_N_COLONIES,
    DEFAULT_N_IMPERIALISTS,
    DEFAULT_SPLIT_RATIO,
    DEFAULT_TIME_WINDOW,
    FUZZYFS_WORKERS,
    MLP_DEFAULT_HIDDEN_OFFSET,
    MLP_EPOCHS,
    MLP_HIDDEN_OFFSETS,
    MLP_INIT_RANGE,
    MLP_LEARNING_RATE,
    MLP_MOMENTUM,
)
from fuzzyfs.errors import FuzzyFSValidationError
from fuzzyfs.mlp import TrainConfig, hidden_size
from fuzzyfs.validation.utils import validate_run_config, validate_seeds


@dataclass(frozen=True)
class RunConfig:
    """Settings of a batch of runs."""

    mode: str = "single"
    data: Optional[str] = None
    target: str = "pbf"
    seeds: List[int] = field(default_factory=lambda: [1])
    iterations: int = DEFAULT_ITERATIONS
    n_imp: int = DEFAULT_N_IMPERIALISTS
    n_col: int = DEFAULT_N_COLONIES
    tw: int = DEFAULT_TIME_WINDOW
    alpha: float = DEFAULT_ALPHA
    beta: float = DEFAULT_BETA
    gamma: float = DEFAULT_GAMMA
    epochs: int = MLP_EPOCHS
    learning_rate: float = MLP_LEARNING_RATE
    momentum: float = MLP_MOMENTUM
    init_range: float = MLP_INIT_RANGE
    hidden_offset: Optional[float] = None
    ratio: float = DEFAULT_SPLIT_RATIO
    workers: int = FUZZYFS_WORKERS
    out: str = "results"
    schema: Optional[str] = None
    emit_plots: bool = False

    @property
    def population(self) -> int:
        """Total number of countries."""
        return self.n_imp + self.n_col

    def offset_for(self, n_x: int) -> float:
        """Hidden layer offset ``c`` for a dataset with ``n_x`` features."""
        if self.hidden_offset is not None:
            return self.hidden_offset
        return MLP_HIDDEN_OFFSETS.get(n_x, MLP_DEFAULT_HIDDEN_OFFSET)

    def n_hidden(self, n_x: int) -> int:
        """Hidden layer width, fixed from the full feature count."""
        return hidden_size(n_x, 1, self.offset_for(n_x))

    def train_config(self, seed: int = 0) -> TrainConfig:
        """MLP trainer settings."""
        return TrainConfig(
            epochs=self.epochs,
            learning_rate=self.learning_rate,
            momentum=self.momentum,
            init_range=self.init_range,
            seed=seed,
        )

    def to_dict(self) -> Dict:
        """Plain mapping of the settings."""
        return asdict(self)


def load_config_file(path: str) -> Dict:
    """Read a flat YAML or JSON configuration file.

    :raises FuzzyFSValidationError: The file is missing or not a mapping.
    """
    if not os.path.isfile(path):
        raise FuzzyFSValidationError("Config file {} does not exist.".format(path))
    with open(path) as f:
        try:
            content = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise FuzzyFSValidationError(
                "Config file {} cannot be parsed: {}".format(path, e)
            )
    if content is None:
        return {}
    if not isinstance(content, dict):
        raise FuzzyFSValidationError(
            "Config file {} must hold a mapping of settings.".format(path)
        )
    return content


def build_run_config(file_values: Dict = None, overrides: Dict = None) -> RunConfig:
    """Merge defaults, config file values and command line overrides.

    Overrides set to ``None`` are ignored.

    :raises ValidationError: The merged settings break the run
        configuration schema.
    :raises FuzzyFSValidationError: Malformed seeds or inconsistent sizes.
    """
    merged = {
        key: value for key, value in RunConfig().to_dict().items() if key != "seeds"
    }
    merged["seeds"] = "1"
    merged.update(file_values or {})
    merged.update(
        {key: value for key, value in (overrides or {}).items() if value is not None}
    )
    validate_run_config(merged)
    merged["seeds"] = validate_seeds(merged["seeds"])
    if merged["n_col"] < merged["n_imp"]:
        raise FuzzyFSValidationError(
            "Need at least as many colonies ({}) as imperialists ({}).".format(
                merged["n_col"], merged["n_imp"]
            )
        )
    return RunConfig(**merged)
