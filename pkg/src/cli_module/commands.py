##################################################
# Module H - Command Line Interface
# Python version: 3.13.x (project standard)
#
# Description:
# click front end with three verbs:
#   compute FAMILY  evaluate one function (s, sp, o, skew-*, sstar)
#   verify SUITE    run a verification suite, JSON lines or text
#   expand FAMILY   expand a Cauchy kernel up to a y-degree
# Results go to stdout, diagnostics to stderr.
# Exit codes: 0 ok, 1 failed check, 2 usage error.
#
# Functions:
# - cli (click group)
# - main(argv)
#
# Requirements:
# - pip install click python-dotenv
##################################################

from __future__ import annotations

import json
import logging
import sys

import click

from evaluator_module.evaluators import FAMILIES, METHODS, evaluate
from identity_module.reports import summarize, write_jsonl
from identity_module.series import cauchy_kernel, correction, x_positions, y_grading, y_positions
from identity_module.settings import load_settings
from identity_module.suites import SUITES, SuiteBounds, run_suite
from laurent_module.laurent_poly import LaurentPoly
from partition_module.partitions import GeneralizedPartition, partitions_up_to
from schur_module.skew_schur import schur_jt

logger = logging.getLogger(__name__)

CAUCHY_FAMILIES = {"s": "schur", "sp": "sp", "o": "o"}


def _partition(ctx, param, value):
    if value is None:
        return None
    try:
        return GeneralizedPartition.parse(value)
    except ValueError as e:
        raise click.BadParameter(f"{value!r} is not a partition ({e})") from None


# -------------------------------------------------------------------
# Group
# -------------------------------------------------------------------
@click.group()
@click.pass_context
def cli(ctx):
    """Exact Schur, symplectic and orthogonal functions."""
    settings = load_settings()
    logging.basicConfig(
        stream=sys.stderr,
        level=settings.log_level,
        format="%(levelname)s %(name)s: %(message)s",
    )
    ctx.obj = settings


@cli.command()
@click.argument("family", type=click.Choice(FAMILIES))
@click.option("--lambda", "la", required=True, callback=_partition, help="comma separated parts, e.g. 2,1,0")
@click.option("--mu", "mu", default="", callback=_partition, help="comma separated parts (skew families)")
@click.option("--nvars", type=click.IntRange(min=0), required=True, help="number of variables N")
@click.option("--method", type=click.Choice(METHODS), default="auto", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def compute(family, la, mu, nvars, method, fmt):
    """Evaluate one function and print it."""
    try:
        value = evaluate(family, la, mu, nvars, method)
    except ValueError as e:
        raise click.UsageError(f"--lambda {la} --mu {mu} --nvars {nvars}: {e}") from None

    if fmt == "json":
        click.echo(
            json.dumps(
                {
                    "family": family,
                    "lambda": la.to_list(),
                    "mu": mu.to_list(),
                    "nvars": nvars,
                    "method": "jt" if method == "auto" else method,
                    "value": value.to_json_obj(),
                }
            )
        )
    else:
        click.echo(value.to_text())


@cli.command()
@click.argument("suite", type=click.Choice(SUITES))
@click.option("--max-weight", type=click.IntRange(min=0), default=None)
@click.option("--max-vars", type=click.IntRange(min=0), default=None)
@click.option("--max-len", type=click.IntRange(min=0), default=None)
@click.option("--degree", type=click.IntRange(min=0), default=None)
@click.option("--threads", type=click.IntRange(min=1), default=None, help="overrides SCHURLAB_THREADS")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True)
@click.pass_context
def verify(ctx, suite, max_weight, max_vars, max_len, degree, threads, fmt):
    """Run a verification suite; exit 1 if any check fails."""
    bounds = SuiteBounds.default(suite).override(
        max_weight=max_weight, max_vars=max_vars, max_len=max_len, degree=degree
    )
    threads = threads or ctx.obj.threads
    reports = run_suite(suite, bounds, threads)

    if fmt == "json":
        write_jsonl(reports, sys.stdout)
    else:
        for report in reports:
            status = "PASS" if report.passed else "FAIL"
            click.echo(f"{status}  {report.identity_id:<30} {report.describe()}")
        metrics, _ = summarize(reports)
        click.echo(
            f"{metrics['passed']}/{metrics['total']} passed "
            f"in {metrics['total_elapsed_s']}s"
        )

    if not all(r.passed for r in reports):
        ctx.exit(1)


@cli.command()
@click.argument("family", type=click.Choice(FAMILIES))
@click.option("--nvars", type=click.IntRange(min=1), required=True)
@click.option("--degree", type=click.IntRange(min=0), required=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def expand(family, nvars, degree, fmt):
    """Expand the Cauchy kernel and the matching character sum up to y-degree D."""
    if family not in CAUCHY_FAMILIES:
        raise click.UsageError(f"expand supports s, sp and o, not {family}")
    kernel_family = CAUCHY_FAMILIES[family]
    N = nvars
    arity = 2 * N
    spec = y_grading(N, N, degree)

    kernel = spec.apply(cauchy_kernel(kernel_family, N, N, spec) * correction(kernel_family, N, N))
    total = LaurentPoly.zero(arity)
    for la in partitions_up_to(N, degree):
        left = evaluate(family, la, GeneralizedPartition(), N)
        total = total + left.embed(x_positions(N), arity) * schur_jt(la, N).embed(y_positions(N, N), arity)

    names = [f"x{i + 1}" for i in range(N)] + [f"y{i + 1}" for i in range(N)]
    if fmt == "json":
        click.echo(
            json.dumps(
                {
                    "family": family,
                    "nvars": N,
                    "degree": degree,
                    "kernel": kernel.to_json_obj(),
                    "sum": total.to_json_obj(),
                    "equal": kernel == total,
                }
            )
        )
    else:
        click.echo(f"kernel: {kernel.to_text(names)}")
        click.echo(f"sum:    {total.to_text(names)}")
        click.echo(f"equal:  {kernel == total}")


def main(argv=None) -> int:
    try:
        code = cli.main(args=argv, prog_name="schurlab", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return code if isinstance(code, int) else 0


if __name__ == "__main__":
    sys.exit(main())
