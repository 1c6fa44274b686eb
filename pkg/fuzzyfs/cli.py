# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.
"""fuzzyfs command line interface."""

import logging
import sys

import click
from jsonschema import ValidationError

from fuzzyfs.config import FUZZYFS_LOG_FORMAT, FUZZYFS_LOG_LEVEL
from fuzzyfs.dataset import check_schema, load_csv
from fuzzyfs.errors import (
    FuzzyFSArtifactError,
    FuzzyFSConfigurationError,
    FuzzyFSDatasetError,
    FuzzyFSTrainingError,
    FuzzyFSValidationError,
)
from fuzzyfs.fuzzy.rulebases import dump_rule_bases
from fuzzyfs.pareto import run_multi
from fuzzyfs.plots import emit_plot_data
from fuzzyfs.results import write_batch, write_run
from fuzzyfs.run_config import build_run_config, load_config_file
from fuzzyfs.search.runner import run_single
from fuzzyfs.utils import click_table_printer

HANDLED_ERRORS = (
    FuzzyFSArtifactError,
    FuzzyFSConfigurationError,
    FuzzyFSDatasetError,
    FuzzyFSTrainingError,
    FuzzyFSValidationError,
    ValidationError,
)

RESULT_HEADERS = ["seed", "n_f", "rmse", "std", "mae", "tic", "power"]


def _diagnostic(error: Exception) -> str:
    message = error.message if isinstance(error, ValidationError) else str(error)
    return " ".join(message.split())


def _print_batch(batch):
    rows = [[run[h] for h in RESULT_HEADERS] for run in batch["runs"]]
    click_table_printer(RESULT_HEADERS, [], rows)
    for name in ("rmse", "n_f"):
        stats = batch["metrics"][name]
        click.echo(
            "{}: mean {:.6g}, median {:.6g}".format(
                name, stats["mean"], stats["median"]
            )
        )


@click.command()
@click.option(
    "--mode",
    type=click.Choice(["single", "multi"]),
    default=None,
    help="Single objective weighted fitness or multi objective Pareto search.",
)
@click.option("--data", type=click.Path(), default=None, help="Dataset CSV file.")
@click.option("--target", default=None, help="Target column name [pbf].")
@click.option(
    "--config",
    "config_file",
    type=click.Path(),
    default=None,
    help="YAML or JSON file with run settings.",
)
@click.option("--seeds", default=None, help="Seeds, e.g. 1..5 or 1,2,3 [1].")
@click.option("--iters", "iterations", type=int, default=None, help="Iterations.")
@click.option("--out", default=None, help="Output directory [results].")
@click.option("--dump-fis", is_flag=True, help="Write the four rule tables.")
@click.option("--emit-plots", is_flag=True, help="Write gnuplot data files.")
@click.option(
    "--schema",
    type=click.Choice(["johnson", "nhanes"]),
    default=None,
    help="Check the dataset header against a bundled schema.",
)
@click.option("--workers", type=int, default=None, help="Evaluation threads.")
@click.option("--ratio", type=float, default=None, help="Train fraction [0.7].")
def cli(
    mode,
    data,
    target,
    config_file,
    seeds,
    iterations,
    out,
    dump_fis,
    emit_plots,
    schema,
    workers,
    ratio,
):
    """Fuzzy adaptive wrapper feature selection for body fat regression."""
    logging.basicConfig(level=FUZZYFS_LOG_LEVEL, format=FUZZYFS_LOG_FORMAT)
    try:
        file_values = load_config_file(config_file) if config_file else {}
        config = build_run_config(
            file_values,
            {
                "mode": mode,
                "data": data,
                "target": target,
                "seeds": seeds,
                "iterations": iterations,
                "out": out,
                "emit_plots": emit_plots or None,
                "schema": schema,
                "workers": workers,
                "ratio": ratio,
            },
        )
        if dump_fis:
            for path in dump_rule_bases(config.out):
                click.echo(path)
            if not config.data:
                return
        if not config.data:
            raise FuzzyFSValidationError("No dataset given, use --data.")

        dataset = load_csv(config.data, config.target)
        if config.schema:
            check_schema(dataset, config.schema)
        runner = run_multi if config.mode == "multi" else run_single
        results = []
        for seed in config.seeds:
            result = runner(config, dataset, seed)
            write_run(result, config, dataset.name, config.out)
            if config.emit_plots:
                emit_plot_data(config.out, seed, config.mode)
            results.append(result)
        _print_batch(write_batch(results, config.out))
    except HANDLED_ERRORS as e:
        logging.error("fuzzyfs failed: {}".format(_diagnostic(e)))
        click.echo("Error: {}".format(_diagnostic(e)), err=True)
        sys.exit(1)


if __name__ == "__main__":
    cli()
