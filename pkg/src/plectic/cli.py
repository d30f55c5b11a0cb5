"""Command-line front end.

Subcommands reproduce the package's reference computations: the entropy /
disorder table of the iterated cross-product stacking, CSV samples of the
two closed-form curves behind it, exact verification of the built-in local
presentation examples, and the seeded property suites.

Exit codes: 0 on success, 1 when a verification or property check fails,
2 on usage errors.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from .canonical import BUILTIN_EXAMPLES, verify_local_presentation
from .chartforms import PolyForm, VectorPolyForm
from .checks import SUITES, run_suite
from .entropy import curve_samples, iterated_cross_entropy
from .polynomial import Polynomial
from .serialize import dumps, presentation_record_to_dict


DEFAULT_C2 = "10,0.5,0.5"


def _parse_c2(text: str) -> tuple[Fraction, Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 3:
        raise click.UsageError("--c2 needs three comma-separated positive values")
    try:
        values = tuple(Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(f"--c2: {exc}")
    if any(v <= 0 for v in values):
        raise click.UsageError("--c2 values must be positive")
    return values


def _parse_grid(x_min: str, x_max: str, step: str) -> list[Fraction]:
    try:
        lo, hi, h = Fraction(x_min), Fraction(x_max), Fraction(step)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(f"bad grid parameter: {exc}")
    if h <= 0:
        raise click.UsageError("--step must be positive")
    if hi < lo:
        raise click.UsageError("--x-max must be >= --x-min")
    xs = []
    x = lo
    while x <= hi:
        xs.append(x)
        x += h
    return xs


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@click.group()
def cli():
    """Exact computations with vector-valued multisymplectic forms."""


@cli.command("entropy-table")
@click.option("--j-min", default=1, show_default=True, type=int)
@click.option("--j-max", default=5, show_default=True, type=int)
@click.option("--c2", default=DEFAULT_C2, show_default=True,
              help="Squared component values c1^2,c2^2,c3^2.")
@click.option("--format", "fmt", type=click.Choice(["csv", "structured-text"]),
              default="csv", show_default=True)
@click.option("--full-precision", is_flag=True,
              help="Print full double precision instead of 4 decimals.")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write to a file instead of stdout.")
def entropy_table(j_min, j_max, c2, fmt, full_precision, out):
    """Entropy and disorder of the j-fold slot-1 self-stacking, per row."""
    if j_min < 0 or j_max < j_min:
        raise click.UsageError("need 0 <= --j-min <= --j-max")
    c_squared = _parse_c2(c2)
    rows = []
    for j in range(j_min, j_max + 1):
        e, d = iterated_cross_entropy(j, c_squared)
        rows.append((j, e, d))

    def fmt_value(x: float) -> str:
        return repr(x) if full_precision else f"{x:.4f}"

    if fmt == "csv":
        lines = ["j,entropy,disorder"]
        lines += [f"{j},{fmt_value(e)},{fmt_value(d)}" for j, e, d in rows]
        _emit("\n".join(lines) + "\n", out)
    else:
        doc = {
            "c_squared": [str(c) for c in c_squared],
            "rows": [
                {"j": j, "entropy": e, "disorder": d} for j, e, d in rows
            ],
        }
        _emit(dumps(doc), out)


@cli.command("entropy-curve")
@click.option("--x-min", default="1", show_default=True)
@click.option("--x-max", default="5", show_default=True)
@click.option("--step", default="1", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write the CSV to a file instead of stdout.")
@click.option("--plot", type=click.Path(dir_okay=False), default=None,
              help="Also render the two curves to this image file.")
def entropy_curve(x_min, x_max, step, out, plot):
    """CSV samples of the closed-form entropy and disorder curves."""
    xs = _parse_grid(x_min, x_max, step)
    try:
        samples = curve_samples(xs)
    except ValueError as exc:
        raise click.UsageError(str(exc))

    # integer gridpoints must agree with the table computation
    for x, y_e, _ in samples:
        if x >= 0 and float(x).is_integer():
            e, _ = iterated_cross_entropy(int(x))
            if abs(e - y_e) > 1e-9:
                raise click.ClickException(
                    f"internal mismatch between curve and table at x={x}"
                )

    lines = ["x,entropy,disorder"]
    lines += [f"{x:g},{y_e:.12g},{y_d:.12g}" for x, y_e, y_d in samples]
    _emit("\n".join(lines) + "\n", out)
    if plot:
        from .plotting import save_curve_figure

        save_curve_figure(samples, plot)
        click.echo(f"figure written to {plot}", err=True)


def _perturbed(potential: VectorPolyForm) -> VectorPolyForm:
    """Add a spurious term to the first component (for failure demos)."""
    first = potential.components[0]
    nvars = first.nvars
    bump_index = tuple(range(1, first.degree + 1))
    bump = PolyForm(nvars, first.degree,
                    {bump_index: Polynomial.variable(nvars, nvars)})
    return VectorPolyForm((first + bump,) + potential.components[1:])


@cli.command("verify-example")
@click.argument("which", type=click.Choice(sorted(BUILTIN_EXAMPLES)))
@click.option("--format", "fmt", type=click.Choice(["text", "structured-text"]),
              default="text", show_default=True)
@click.option("--perturb", is_flag=True,
              help="Deliberately damage the preset potential to show a failure.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def verify_example(which, fmt, perturb, out):
    """Check that the pullback of the canonical form reproduces an example."""
    omega, preset = BUILTIN_EXAMPLES[which]()
    if perturb:
        preset = _perturbed(preset)
    records = {
        "preset potential": verify_local_presentation(omega, potential=preset),
        "homotopy potential": verify_local_presentation(omega),
    }
    ok = all(r.exact_match for r in records.values())

    if fmt == "structured-text":
        doc = {
            "example": which,
            "passed": ok,
            "runs": {label: presentation_record_to_dict(r)
                     for label, r in records.items()},
        }
        _emit(dumps(doc), out)
    else:
        chart = records["preset potential"].chart
        names = chart.var_names()
        lines = [
            f"example {which}: base dim {chart.base_dim}, k={chart.k}, "
            f"m={chart.m}, total chart dim {chart.total_dim}",
        ]
        for label, record in records.items():
            status = "PASS" if record.exact_match else "FAIL"
            lines.append(f"  {label}: residual is "
                         f"{'zero' if record.exact_match else 'NONZERO'} -> {status}")
            for idx, comp in enumerate(record.potential.components, start=1):
                lines.append(f"    potential[{idx}] = {comp.format(names)}")
            if not record.exact_match:
                for idx, comp in enumerate(record.residual.components, start=1):
                    if not comp.is_zero():
                        lines.append(f"    residual[{idx}] = {comp.format(names)}")
            if record.degenerate_at_center:
                lines.append("    warning: form is degenerate at the center")
        _emit("\n".join(lines) + "\n", out)
    if not ok:
        sys.exit(1)


@cli.command("check")
@click.argument("suite", type=click.Choice(sorted(SUITES)))
@click.option("--seed", default=1, show_default=True, type=int)
@click.option("--format", "fmt", type=click.Choice(["text", "structured-text"]),
              default="text", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def check(suite, seed, fmt, out):
    """Run a seeded property suite and report per-property results."""
    result = run_suite(suite, seed)
    if fmt == "structured-text":
        _emit(json.dumps(result.to_dict(), indent=2) + "\n", out)
    else:
        _emit("\n".join(result.lines()) + "\n", out)
    if not result.passed:
        sys.exit(1)


def main():
    cli()


if __name__ == "__main__":
    main()
