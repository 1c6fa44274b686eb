# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.
"""Tabular regression datasets: loading, splitting, scaling and projection."""

import json
import logging
import math
import os
from dataclasses import dataclass, field
from typing import Dict, List, Sequence

import numpy as np
import pandas as pd
from sklearn.model_selection import train_test_split
from sklearn.preprocessing import StandardScaler

from fuzzyfs.config import DATASET_MANIFESTS
from fuzzyfs.errors import (
    FuzzyFSDatasetError,
    FuzzyFSEmptyMaskError,
    FuzzyFSValidationError,
)


@dataclass(frozen=True)
class Dataset:
    """Feature matrix, target vector and feature names."""

    X: np.ndarray
    y: np.ndarray
    feature_names: List[str]
    name: str = "dataset"

    def __post_init__(self):
        """Check shapes and finiteness."""
        if self.X.ndim != 2 or self.X.shape[1] < 1:
            raise FuzzyFSDatasetError("Feature matrix must have at least one column.")
        if self.X.shape[0] != self.y.shape[0]:
            raise FuzzyFSDatasetError(
                "Feature matrix has {} rows but target has {}.".format(
                    self.X.shape[0], self.y.shape[0]
                )
            )
        if len(self.feature_names) != self.X.shape[1]:
            raise FuzzyFSDatasetError(
                "Expected {} feature names, got {}.".format(
                    self.X.shape[1], len(self.feature_names)
                )
            )
        if not (np.all(np.isfinite(self.X)) and np.all(np.isfinite(self.y))):
            raise FuzzyFSDatasetError("Dataset contains non-finite values.")

    @property
    def n_rows(self) -> int:
        """Number of observations."""
        return self.X.shape[0]

    @property
    def n_features(self) -> int:
        """Number of feature columns ``n_x``."""
        return self.X.shape[1]


@dataclass(frozen=True)
class SplitDataset:
    """Disjoint train and test partitions of one dataset."""

    train: Dataset
    test: Dataset
    ratio: float
    seed: int
    train_index: np.ndarray = field(repr=False)
    test_index: np.ndarray = field(repr=False)

    @property
    def n_features(self) -> int:
        """Number of feature columns shared by both partitions."""
        return self.train.n_features

    @property
    def feature_names(self) -> List[str]:
        """Feature names shared by both partitions."""
        return self.train.feature_names


def load_csv(path: str, target: str, name: str = None) -> Dataset:
    """Load a comma separated file with a header row.

    Every column but ``target`` becomes a feature, in header order.

    :param path: CSV file location.
    :param target: Name of the target column.
    :param name: Dataset name, defaults to the file stem.
    :raises FuzzyFSDatasetError: Missing file, missing target column, or
        cells that are empty or not finite numbers.
    """
    if not os.path.isfile(path):
        raise FuzzyFSDatasetError("Dataset file {} does not exist.".format(path))
    try:
        frame = pd.read_csv(
            path, dtype=str, keep_default_na=False, encoding="utf-8-sig"
        )
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise FuzzyFSDatasetError("Cannot parse {}: {}".format(path, e))
    frame.columns = [str(column).strip() for column in frame.columns]
    if target not in frame.columns:
        raise FuzzyFSDatasetError(
            "Target column '{}' not found in {}.".format(target, path)
        )
    if frame.shape[0] == 0:
        raise FuzzyFSDatasetError("Dataset {} has no rows.".format(path))

    bad_cells = []
    for column in frame.columns:
        parsed = pd.to_numeric(frame[column].str.strip(), errors="coerce")
        invalid = ~np.isfinite(parsed.to_numpy(dtype=float))
        for row in np.flatnonzero(invalid):
            bad_cells.append((int(row) + 1, column, frame[column].iloc[row]))
    if bad_cells:
        bad_cells.sort()
        raise FuzzyFSDatasetError(
            "Dataset {} has {} malformed cell(s).".format(path, len(bad_cells)),
            bad_cells=bad_cells,
        )

    values = frame.apply(lambda column: column.str.strip()).astype(float)
    feature_names = [column for column in values.columns if column != target]
    if not feature_names:
        raise FuzzyFSDatasetError("Dataset {} has no feature columns.".format(path))
    dataset = Dataset(
        X=values[feature_names].to_numpy(dtype=float),
        y=values[target].to_numpy(dtype=float),
        feature_names=feature_names,
        name=name or os.path.splitext(os.path.basename(path))[0],
    )
    logging.info(
        "Loaded {} rows and {} features from {}".format(
            dataset.n_rows, dataset.n_features, path
        )
    )
    return dataset


def save_csv(dataset: Dataset, path: str, target: str = "pbf") -> None:
    """Write ``dataset`` as CSV with full floating point precision."""
    frame = pd.DataFrame(dataset.X, columns=dataset.feature_names)
    frame[target] = dataset.y
    frame.to_csv(path, index=False, float_format="%.17g")


def load_schema(name: str) -> Dict:
    """Load a bundled dataset manifest (``johnson`` or ``nhanes``).

    :raises FuzzyFSValidationError: No manifest of that name is shipped.
    """
    try:
        manifest_path = DATASET_MANIFESTS[name]
    except KeyError:
        raise FuzzyFSValidationError(
            "Unknown dataset schema '{}'. Available: {}".format(
                name, ", ".join(sorted(DATASET_MANIFESTS))
            )
        )
    with open(manifest_path) as f:
        return json.load(f)


def check_schema(dataset: Dataset, name: str) -> None:
    """Check ``dataset`` has exactly the features of manifest ``name``.

    :raises FuzzyFSDatasetError: Feature names or their order differ.
    """
    manifest = load_schema(name)
    expected = manifest["features"]
    if list(dataset.feature_names) != list(expected):
        missing = [f for f in expected if f not in dataset.feature_names]
        extra = [f for f in dataset.feature_names if f not in expected]
        raise FuzzyFSDatasetError(
            "Dataset does not match the '{}' schema "
            "(missing: {}; unexpected: {}).".format(
                name, ", ".join(missing) or "-", ", ".join(extra) or "-"
            )
        )


def _take(dataset: Dataset, rows: np.ndarray) -> Dataset:
    return Dataset(
        X=dataset.X[rows],
        y=dataset.y[rows],
        feature_names=list(dataset.feature_names),
        name=dataset.name,
    )


def train_rows(n_rows: int, ratio: float) -> int:
    """Train partition size, ``ratio * n_rows`` rounded half up."""
    return int(min(max(math.floor(ratio * n_rows + 0.5), 1), n_rows - 1))


def split(dataset: Dataset, ratio: float, seed: int) -> SplitDataset:
    """Seeded random train/test partition.

    :raises FuzzyFSValidationError: ``ratio`` outside ``(0, 1)`` or fewer
        than two rows.
    """
    if not 0.0 < ratio < 1.0:
        raise FuzzyFSValidationError(
            "Split ratio must lie in (0, 1), got {}.".format(ratio)
        )
    if dataset.n_rows < 2:
        raise FuzzyFSValidationError("Cannot split a dataset with fewer than 2 rows.")
    train_index, test_index = train_test_split(
        np.arange(dataset.n_rows),
        train_size=train_rows(dataset.n_rows, ratio),
        random_state=seed,
    )
    train_index = np.sort(train_index)
    test_index = np.sort(test_index)
    return SplitDataset(
        train=_take(dataset, train_index),
        test=_take(dataset, test_index),
        ratio=ratio,
        seed=seed,
        train_index=train_index,
        test_index=test_index,
    )


def normalize(data: SplitDataset) -> SplitDataset:
    """Standardize features with train statistics.

    Columns that are constant on the train partition become zero in both
    partitions. The target is left as is.
    """
    scaler = StandardScaler().fit(data.train.X)
    train_X = scaler.transform(data.train.X)
    test_X = scaler.transform(data.test.X)
    constant = np.ptp(data.train.X, axis=0) == 0
    train_X[:, constant] = 0.0
    test_X[:, constant] = 0.0
    return SplitDataset(
        train=Dataset(train_X, data.train.y, data.train.feature_names, data.train.name),
        test=Dataset(test_X, data.test.y, data.test.feature_names, data.test.name),
        ratio=data.ratio,
        seed=data.seed,
        train_index=data.train_index,
        test_index=data.test_index,
    )


def _check_mask(mask: Sequence[int], n_features: int) -> np.ndarray:
    mask = np.asarray(mask).astype(bool)
    if mask.shape != (n_features,):
        raise FuzzyFSValidationError(
            "Mask length {} does not match {} features.".format(mask.size, n_features)
        )
    if not mask.any():
        raise FuzzyFSEmptyMaskError()
    return mask


def project(dataset: Dataset, mask: Sequence[int]) -> Dataset:
    """Restrict ``dataset`` to the columns selected by ``mask``.

    :raises FuzzyFSEmptyMaskError: No bit of ``mask`` is set.
    """
    mask = _check_mask(mask, dataset.n_features)
    return Dataset(
        X=dataset.X[:, mask],
        y=dataset.y,
        feature_names=[n for n, keep in zip(dataset.feature_names, mask) if keep],
        name=dataset.name,
    )


def project_split(data: SplitDataset, mask: Sequence[int]) -> SplitDataset:
    """Apply :func:`project` to both partitions."""
    return SplitDataset(
        train=project(data.train, mask),
        test=project(data.test, mask),
        ratio=data.ratio,
        seed=data.seed,
        train_index=data.train_index,
        test_index=data.test_index,
    )


def selected_names(feature_names: Sequence[str], mask: Sequence[int]) -> List[str]:
    """Names of the features selected by ``mask``."""
    return [name for name, bit in zip(feature_names, mask) if bit]
