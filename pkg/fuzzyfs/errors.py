# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.
"""fuzzyfs errors."""


class FuzzyFSValidationError(Exception):
    """Validation error."""

    def __init__(self, message):
        """Initialize FuzzyFSValidationError exception."""
        super(FuzzyFSValidationError, self).__init__(message)
        self.message = message


class FuzzyFSEmptyMaskError(FuzzyFSValidationError):
    """A feature mask selects no feature."""

    def __init__(self, message="Feature mask must select at least one feature."):
        """Initialize FuzzyFSEmptyMaskError exception."""
        super(FuzzyFSEmptyMaskError, self).__init__(message)


class FuzzyFSConfigurationError(Exception):
    """Fuzzy rule base refers to an unknown variable or term."""

    def __init__(self, message):
        """Initialize FuzzyFSConfigurationError exception."""
        super(FuzzyFSConfigurationError, self).__init__(message)
        self.message = message


class FuzzyFSDatasetError(Exception):
    """Dataset could not be loaded."""

    def __init__(self, message, bad_cells=None):
        """Initialize FuzzyFSDatasetError exception.

        :param message: Human readable description of the problem.
        :param bad_cells: Optional list of ``(row, column, value)`` tuples
            pointing at the offending cells, rows counted from 1.
        """
        super(FuzzyFSDatasetError, self).__init__(message)
        self.message = message
        self.bad_cells = bad_cells or []

    def __str__(self):
        """Represent dataset error as a string."""
        if not self.bad_cells:
            return self.message
        cells = "; ".join(
            "row {} column '{}': {!r}".format(row, column, value)
            for row, column, value in self.bad_cells
        )
        return "{} ({})".format(self.message, cells)


class FuzzyFSTrainingError(Exception):
    """MLP training diverged."""

    def __init__(self, message):
        """Initialize FuzzyFSTrainingError exception."""
        super(FuzzyFSTrainingError, self).__init__(message)
        self.message = message

    def __str__(self):
        """Represent training error as a string."""
        return "Training error: {}".format(self.message or "")


class FuzzyFSArtifactError(Exception):
    """Run artifacts are missing or unreadable."""

    def __init__(self, message):
        """Initialize FuzzyFSArtifactError exception."""
        super(FuzzyFSArtifactError, self).__init__(message)
        self.message = message
