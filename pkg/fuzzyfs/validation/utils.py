# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""fuzzyfs validation utilities."""

import json
import logging
import re
from functools import lru_cache
from typing import Dict, List

from jsonschema.exceptions import best_match
from jsonschema.validators import validator_for

from fuzzyfs.config import run_config_schema_file_path, run_summary_schema_file_path
from fuzzyfs.errors import FuzzyFSValidationError

SEED_RANGE = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")


@lru_cache(maxsize=None)
def _validator(schema_path: str):
    """Build a validator for the JSON schema stored at ``schema_path``."""
    try:
        with open(schema_path, "r") as f:
            schema = json.loads(f.read())
    except IOError as e:
        logging.info(
            "Something went wrong when reading validation schema from "
            "{filepath} : \n"
            "{error}".format(filepath=schema_path, error=e.strerror)
        )
        raise e
    validator_class = validator_for(schema)
    validator_class.check_schema(schema)
    return validator_class(schema)


def _validate(instance: Dict, schema_path: str, what: str) -> None:
    errors = list(_validator(schema_path).iter_errors(instance))
    if errors:
        err = best_match(errors)
        path = ".".join(map(str, err.absolute_path))
        logging.error(
            "Invalid {what}{at}: {error}".format(
                what=what, at=" at '{}'".format(path) if path else "", error=err.message
            )
        )
        raise err


def validate_run_config(run_config: Dict) -> None:
    """Validate a merged run configuration mapping.

    :param run_config: Flat mapping of run settings.
    :raises ValidationError: The mapping does not validate against
        the run configuration schema.
    """
    _validate(run_config, run_config_schema_file_path, "run configuration")


def validate_run_summary(run_summary: Dict) -> None:
    """Validate a run summary before it is written.

    :raises ValidationError: The summary does not validate against the
        published run summary schema.
    """
    _validate(run_summary, run_summary_schema_file_path, "run summary")


def validate_seeds(seeds: str) -> List[int]:
    """Parse an inclusive range ``"1..5"`` or a list ``"1,2,3"`` of seeds.

    :raises FuzzyFSValidationError: Malformed or empty seed expression.
    """
    if seeds is None:
        raise FuzzyFSValidationError("No seeds given.")
    if isinstance(seeds, int):
        return [seeds]
    if isinstance(seeds, list):
        return [int(seed) for seed in seeds]
    match = SEED_RANGE.match(seeds)
    if match:
        first, last = int(match.group(1)), int(match.group(2))
        if last < first:
            raise FuzzyFSValidationError(
                'Seed range "{}" is empty.'.format(seeds)
            )
        return list(range(first, last + 1))
    try:
        parsed = [int(seed) for seed in seeds.split(",") if seed.strip()]
    except ValueError:
        raise FuzzyFSValidationError(
            'Seeds "{}" must be a range like 1..5 or a list like 1,2,3.'.format(seeds)
        )
    if not parsed or any(seed < 0 for seed in parsed):
        raise FuzzyFSValidationError(
            'Seeds "{}" must be non-negative integers.'.format(seeds)
        )
    return parsed
