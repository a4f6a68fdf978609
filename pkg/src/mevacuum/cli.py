"""Command-line front end.

Exit codes: 0 success, 3 config validation failure, 4 warnings present
under ``--strict``, 5 computation error.
"""
from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import click

from . import commands
from .config import ConfigError, read_config
from .units import UnitError, convert_units

EXIT_CONFIG = 3
EXIT_STRICT = 4
EXIT_COMPUTE = 5


def _emit(record, out: str | None, fmt: str, strict: bool, columns: str | None):
    text = record.to_json() if fmt == "json" else record.to_table()
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)
    if columns and record.columns:
        Path(columns).write_text(record.to_columns())
    if strict and record.warnings:
        for w in record.warnings:
            click.echo(f"strict: {w}", err=True)
        sys.exit(EXIT_STRICT)


def _run(ctx: click.Context, fn, *args, **kwargs):
    opts = ctx.obj
    try:
        cfg = read_config(opts["config"])
        record = fn(cfg, *args, system=opts["units"], **kwargs)
    except (ConfigError, UnitError) as exc:
        click.echo(f"config error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)
    except (ValueError, ArithmeticError) as exc:
        click.echo(f"computation error: {exc}", err=True)
        sys.exit(EXIT_COMPUTE)
    _emit(record, opts["out"], opts["fmt"], opts["strict"], opts["columns"])


def _common(fn):
    fn = click.option("--config", "config", required=True, type=click.Path(exists=True, dir_okay=False))(fn)
    fn = click.option("--units", type=click.Choice(["si", "gaussian"]), default=None,
                      help="Output unit system (overrides the config).")(fn)
    fn = click.option("--strict", is_flag=True, help="Treat warnings as errors.")(fn)
    fn = click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the report here.")(fn)
    fn = click.option("--format", "fmt", type=click.Choice(["json", "table"]), default="json")(fn)
    fn = click.option("--columns", type=click.Path(dir_okay=False), default=None,
                      help="Write columnar (TSV) data for plotting, where the command has any.")(fn)
    return fn


def _store(ctx, config, units, strict, out, fmt, columns):
    ctx.obj = {"config": config, "units": units, "strict": strict, "out": out, "fmt": fmt, "columns": columns}


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Vacuum momentum transfer to magnetoelectric media."""


@main.command("mode-stress")
@_common
@click.pass_context
def mode_stress(ctx, **kw):
    """Net counter-propagating mode stress: closed form vs quadrature."""
    _store(ctx, **kw)
    _run(ctx, commands.cmd_mode_stress)


@main.command("vacuum")
@_common
@click.option("--sweep", default=None, help="lambda_c=START:STOP:N (geometric spacing).")
@click.pass_context
def vacuum_cmd(ctx, sweep, **kw):
    """Cutoff-regularized vacuum stress T0 and momentum density g0."""
    _store(ctx, **kw)
    _run(ctx, commands.cmd_vacuum, sweep)


@main.command("ledger")
@_common
@click.option("--mode", type=click.Choice(["naive", "full"]), default="full")
@click.pass_context
def ledger_cmd(ctx, mode, **kw):
    """Region and surface force-density ledger."""
    _store(ctx, **kw)
    _run(ctx, commands.cmd_ledger, mode)


@main.command("flow")
@_common
@click.pass_context
def flow_cmd(ctx, **kw):
    """Poiseuille speed, flow rate and dissipated power."""
    _store(ctx, **kw)
    _run(ctx, commands.cmd_flow)


@main.command("radiometer")
@_common
@click.pass_context
def radiometer_cmd(ctx, **kw):
    """Radiometer torque, spin rate and pivot dissipation."""
    _store(ctx, **kw)
    _run(ctx, commands.cmd_radiometer)


@main.command("transient")
@_common
@click.pass_context
def transient_cmd(ctx, **kw):
    """Impulse density delivered by a susceptibility ramp."""
    _store(ctx, **kw)
    _run(ctx, commands.cmd_transient)


@main.command("audit")
@_common
@click.option("--mode", type=click.Choice(["naive", "full"]), default="full")
@click.option("--steady/--unsteady", "fields_steady", default=None,
              help="Whether the applied fields are steady (default: config, else steady).")
@click.pass_context
def audit_cmd(ctx, mode, fields_steady, **kw):
    """First-law audit of a ledger and its implied flow."""
    _store(ctx, **kw)
    _run(ctx, commands.cmd_audit, mode, fields_steady)


@main.command("convert")
@click.argument("value")
@click.argument("from_unit")
@click.argument("to_unit")
@click.option("--exact", is_flag=True, help="Print the exact rational result.")
def convert_cmd(value, from_unit, to_unit, exact):
    """Convert VALUE from FROM_UNIT to TO_UNIT using the pinned factor table."""
    try:
        result = convert_units(value, from_unit, to_unit)
    except UnitError as exc:
        click.echo(f"unit error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)
    except (ValueError, ArithmeticError):
        click.echo(f"unit error: not a number: {value!r}", err=True)
        sys.exit(EXIT_CONFIG)
    if exact and isinstance(result, Fraction):
        click.echo(f"{result} {to_unit}")
    else:
        click.echo(f"{float(result)!r} {to_unit}")


if __name__ == "__main__":
    main()
