"""The ``theoria`` command group

    theoria run SCRIPT          run a session script (``theoria SCRIPT`` also works)
    theoria verify --suite S    run property suites
    theoria gallery [NAME]      list or check gallery cases
    theoria export EXPR         print a family expression as DSL, JSON or DOT
    theoria history [--stats]   show recent verify runs or their statistics

Exit status: 0 when every check holds, 1 on a property violation, 2 on a
usage or parse error.
"""

import json
import os

import click

from config.settings import DEFAULT_BASE_SEED, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, VERIFY_SUITES
from src.core.errors import TheoriaError
from src.gallery.cases import CASES, get_case
from src.utils.history import (
    format_verify_history, format_verify_statistics, get_verify_statistics, search_verify_runs,
)
from src.utils.utils import format_frame, format_table, setup_logging, status_mark
from .interpreter import Session
from .parser import Command, parse_expression, parse_script
from .verify import run_verify


class ScriptAwareGroup(click.Group):
    """Treats ``theoria SCRIPT`` as ``theoria run SCRIPT``."""

    def parse_args(self, ctx, args):
        for i, arg in enumerate(args):
            if arg in self.commands:
                break
            if not arg.startswith("-") and os.path.isfile(arg):
                args = args[:i] + ["run"] + args[i:]
                break
        return super().parse_args(ctx, args)


def _fail(message, code=EXIT_USAGE):
    click.echo(f"❌ {message}", err=True)
    raise SystemExit(code)


@click.group(cls=ScriptAwareGroup)
@click.option("--json", "as_json", is_flag=True, help="Machine-readable JSON output.")
@click.option("--log-level", default=None, help="Logging level (default from settings).")
@click.pass_context
def cli(ctx, as_json, log_level):
    """Symbolic closures, generating sets and lattices of theory families."""
    setup_logging(log_level)
    ctx.obj = {"json": as_json}


@cli.command()
@click.argument("script", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def run(ctx, script):
    """Run the definitions and commands of SCRIPT."""
    with open(script, "r") as f:
        text = f.read()
    try:
        parsed = parse_script(text)
    except TheoriaError as exc:
        _fail(f"{script}: {exc}")
    raise SystemExit(Session(as_json=ctx.obj["json"], echo=click.echo).run(parsed))


@cli.command()
@click.option("--suite", default="all", show_default=True,
              help=f"One of all, {', '.join(VERIFY_SUITES)}.")
@click.option("--seeds", type=int, default=None, help="Random instances per suite (0 = gallery only).")
@click.option("--base-seed", type=int, default=DEFAULT_BASE_SEED, show_default=True)
@click.pass_context
def verify(ctx, suite, seeds, base_seed):
    """Run property suites over gallery and random instances."""
    try:
        report = run_verify(suite, seeds, base_seed)
    except TheoriaError as exc:
        _fail(str(exc))
    if ctx.obj["json"]:
        click.echo(json.dumps(report.to_json(), indent=2))
    else:
        click.echo(format_frame(f"verify {suite}", report.to_frame()))
        for name, instance, message in report.failures:
            click.echo(f"❌ {name} {instance}: {message}")
        click.echo(f"{status_mark(report.passed)} {len(report.failures)} failure(s)")
    raise SystemExit(report.exit_code)


@cli.command()
@click.argument("name", required=False)
@click.pass_context
def gallery(ctx, name):
    """List gallery cases, or show and check the case NAME."""
    if name is None:
        for case in (factory() for factory in CASES.values()):
            click.echo(f"{case.name:<20} {case.summary}")
        raise SystemExit(EXIT_OK)
    try:
        case = get_case(name)
    except TheoriaError as exc:
        _fail(str(exc))
    results = case.check()
    ok = all(match for _, _, match in results.values())
    if ctx.obj["json"]:
        click.echo(json.dumps({
            "name": case.name,
            "families": {k: f.to_dsl() for k, f in case.families.items()},
            "verdicts": {k: {"expected": e, "live": v, "match": m} for k, (e, v, m) in results.items()},
        }, indent=2, default=str))
    else:
        click.echo(format_table(f"{case.name}: {case.summary}",
                                [(k, f.to_dsl()) for k, f in case.families.items()]))
        click.echo(format_table("verdicts",
                                [(k, f"{status_mark(m)} expected {e!r}, got {v!r}")
                                 for k, (e, v, m) in results.items()]))
    raise SystemExit(EXIT_OK if ok else EXIT_VIOLATION)


@cli.command()
@click.argument("expression")
@click.option("--format", "fmt", type=click.Choice(["dsl", "json", "dot"]), default="dsl",
              show_default=True)
def export(expression, fmt):
    """Print the family EXPRESSION in the chosen format."""
    try:
        expr = parse_expression(expression)
        session = Session(echo=click.echo)
        code = session.run_command(Command("export", [expr], {"format": fmt}))
    except TheoriaError as exc:
        _fail(str(exc))
    raise SystemExit(code)


@cli.command()
@click.option("--suite", default=None, help="Only runs of this suite.")
@click.option("--failed", is_flag=True, help="Only runs with failures.")
@click.option("--stats", is_flag=True, help="Totals per suite and failing instances instead of runs.")
@click.pass_context
def history(ctx, suite, failed, stats):
    """Show recent verify runs."""
    if stats:
        if ctx.obj["json"]:
            click.echo(json.dumps(get_verify_statistics(), indent=2))
        else:
            click.echo(format_verify_statistics())
        return
    runs = search_verify_runs(suite=suite, passed=False if failed else None)
    if ctx.obj["json"]:
        click.echo(json.dumps(runs, indent=2))
    else:
        click.echo(format_verify_history(runs=runs))


def main():
    cli(prog_name="theoria")


if __name__ == "__main__":
    main()
