# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.
"""fuzzyfs utils."""

import json
import os
from typing import Dict, Sequence

import click
import numpy as np


def click_table_printer(headers, _filter, data, colours=None):
    """Generate space separated output for click commands."""
    _filter = [h.lower() for h in _filter] + [h.upper() for h in _filter]
    header_indexes = [i for i, item in enumerate(headers)]
    if _filter:
        header_indexes = [
            i for i, item in enumerate(headers) if item.upper() in _filter
        ]
    headers = [h for h in headers if not _filter or h in _filter]
    header_widths = [len(h) for h in headers]

    for row in data:
        for i, idx in enumerate(header_indexes):
            if header_widths[i] < len(format_cell(row[idx])):
                header_widths[i] = len(format_cell(row[idx]))
    formatted_output = "   ".join("{{:<{0}}}".format(hw) for hw in header_widths)
    click.echo(formatted_output.format(*[h.upper() for h in headers]))
    colours = colours if len(colours or []) == len(data) else None
    for i, row in enumerate(data):
        row = [format_cell(row[idx]) for idx in header_indexes]
        click.secho(
            formatted_output.format(*row),
            fg=colours[i] if colours else None,
        )


def format_cell(value) -> str:
    """Render a table cell, floats with six significant digits."""
    if value is None:
        return "-"
    if isinstance(value, float):
        return "{:.6g}".format(value)
    return str(value)


def ensure_directory(path: str) -> str:
    """Create ``path`` if needed and return it."""
    os.makedirs(path, exist_ok=True)
    return path


def write_json(path: str, content: Dict) -> None:
    """Write ``content`` with sorted keys so reruns are byte identical."""
    with open(path, "w") as f:
        json.dump(content, f, indent=2, sort_keys=True)
        f.write("\n")


def mean_and_median(values: Sequence[float]) -> Dict:
    """Mean and median of the defined values, ``None`` when there are none."""
    defined = [v for v in values if v is not None]
    if not defined:
        return {"mean": None, "median": None}
    return {"mean": float(np.mean(defined)), "median": float(np.median(defined))}
