"""Command-line interface.

Usage:
    headplacement landscape --n 10 --cost identity
    headplacement verify --n-max 6 --cost exp:2
    headplacement ring --format json
    headplacement correlate --data counts.tsv
    headplacement placement
    headplacement appendix prefer --order SOV --s 1 --o 1

Tables go to stdout as CSV (default) or JSON; diagnostics go to stderr.
Exit status is 0 on success, 1 on domain or validation errors and 2 on
usage errors.
"""
from __future__ import annotations

import csv
import functools
import io
import json
import sys
import warnings
from decimal import Decimal
from fractions import Fraction

import click

from . import constituent_calculus as cc
from .cost_core import landscape, optimal_placements, parse_cost_spec, worst_placements
from .exceptions import DomainError, ValidationError
from .mla_oracle import TreeInstance, enumerate_extremes
from .permutation_space import (
    CLOCKWISE_CHAIN,
    WordOrder,
    bundled_frequency_table,
    load_frequency_table,
    ring_distance,
    verb_placement_summary,
)
from .stats import pearson_test, spearman_exact_pvalue, spearman_rho

__all__ = ["main"]


class CostSpec(click.ParamType):
    name = "cost-spec"

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return parse_cost_spec(value)
        except ValidationError as exc:
            self.fail(str(exc), param, ctx)


COST = CostSpec()
FORMAT = click.option(
    "--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True
)


def _plain(value):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, (Decimal, Fraction)):
        return float(value)
    if isinstance(value, (tuple, list, frozenset, set)):
        return " ".join(str(_plain(v)) for v in value)
    if hasattr(value, "value"):
        return value.value
    return float(value)


def render(rows: list[dict], fmt: str) -> str:
    """Serialize flat rows; every row must share the first row's keys."""
    rows = [{k: _plain(v) for k, v in row.items()} for row in rows]
    if rows and any(list(r) != list(rows[0]) for r in rows):
        raise AssertionError("rows must share identical keys")
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return buf.getvalue()


def emit(rows, fmt):
    click.echo(render(rows, fmt), nl=False)


def domain_errors(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (DomainError, ValidationError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)

    return wrapper


@click.group()
def main():
    """Online memory cost of head placement and S/V/O word order tools."""


@main.command("landscape")
@click.option("--n", "n", type=int, required=True, help="Number of dependents (>= 2).")
@click.option("--cost", type=COST, default="identity", show_default=True)
@FORMAT
@domain_errors
def cmd_landscape(n, cost, fmt):
    """Total cost D_l for every head position l."""
    result = landscape(n, cost)
    rows = [
        {
            "l": l,
            "cost": c,
            "is_minimum": l in result.minima,
            "is_maximum": l in result.maxima,
        }
        for l, c in zip(result.positions, result.costs)
    ]
    emit(rows, fmt)
    click.echo(f"minima={list(result.minima)} maxima={list(result.maxima)}", err=True)


@main.command("verify")
@click.option("--n-max", type=int, required=True, help="Largest n checked (2..8).")
@click.option("--cost", type=COST, default="identity", show_default=True)
@FORMAT
@domain_errors
def cmd_verify(n_max, cost, fmt):
    """Compare analytic extremes with exhaustive enumeration of star trees."""
    if not 2 <= n_max <= 8:
        raise DomainError(f"--n-max must lie in [2, 8], got {n_max}")
    rows = []
    failures = 0
    for n in range(2, n_max + 1):
        oracle = enumerate_extremes(TreeInstance.star(n), cost)
        land = landscape(n, cost)
        expected_min = optimal_placements(n, cost)
        expected_max = worst_placements(n, cost)
        ok = (
            oracle.min_hub_positions == expected_min
            and oracle.max_hub_positions == expected_max
            and land.numeric_minima() == expected_min
        )
        failures += not ok
        rows.append(
            {
                "n": n,
                "analytic_minima": expected_min,
                "oracle_minima": oracle.min_hub_positions,
                "analytic_maxima": expected_max,
                "oracle_maxima": oracle.max_hub_positions,
                "min_cost": land.min_cost,
                "oracle_min_cost": oracle.min_cost,
                "status": "pass" if ok else "FAIL",
            }
        )
    emit(rows, fmt)
    click.echo(f"{len(rows) - failures}/{len(rows)} passed for cost {cost.spec()}", err=True)
    if failures:
        sys.exit(1)


@main.command("ring")
@FORMAT
def cmd_ring(fmt):
    """Edges of the adjacent-swap ring with distances from SOV."""
    rows = []
    for i, a in enumerate(CLOCKWISE_CHAIN):
        b = CLOCKWISE_CHAIN[(i + 1) % len(CLOCKWISE_CHAIN)]
        rows.append(
            {
                "source": a,
                "target": b,
                "source_clockwise_distance": i,
                "target_clockwise_distance": CLOCKWISE_CHAIN.index(b),
                "source_ring_distance": ring_distance(WordOrder.SOV, a),
                "target_ring_distance": ring_distance(WordOrder.SOV, b),
            }
        )
    emit(rows, fmt)


def _table(data):
    return bundled_frequency_table() if data is None else load_frequency_table(data)


@main.command("correlate")
@click.option("--data", type=click.Path(exists=True, dir_okay=False), default=None,
              help="ORDER<TAB>COUNT file; defaults to the bundled dataset.")
@FORMAT
@domain_errors
def cmd_correlate(data, fmt):
    """Language counts against clockwise distance from SOV, with correlation tests."""
    table = _table(data)
    chain = table.by_clockwise_distance()
    xs = [d for _, d, _ in chain]
    ys = [c for _, _, c in chain]
    rho = spearman_rho(xs, ys)
    p_exact = spearman_exact_pvalue(xs, ys)
    pearson = pearson_test(xs, ys)
    rows = [
        {
            "order": order,
            "clockwise_distance": d,
            "ring_distance": ring_distance(WordOrder.SOV, order),
            "count": count,
            "spearman_rho": rho,
            "spearman_exact_p": p_exact,
            "pearson_r": pearson.r,
            "pearson_t": pearson.statistic,
            "pearson_p": pearson.pvalue,
        }
        for order, d, count in chain
    ]
    emit(rows, fmt)


@main.command("placement")
@click.option("--data", type=click.Path(exists=True, dir_okay=False), default=None)
@FORMAT
@domain_errors
def cmd_placement(data, fmt):
    """Languages by verb placement: initial, central, final."""
    summary, total = verb_placement_summary(_table(data))
    rows = [
        {
            "verb_placement": row.verb_position,
            "orders": row.orders,
            "count": row.count,
            "percentage": "NA" if row.percentage is None else str(row.percentage),
        }
        for row in summary
    ]
    rows.append({"verb_placement": "total", "orders": "", "count": total, "percentage": ""})
    emit(rows, fmt)


@main.group("appendix")
def appendix():
    """Head-to-head dependency lengths of S, V, O constituents."""


ORDER = click.option("--order", type=click.Choice(["SOV", "SVO"], case_sensitive=False), required=True)


@appendix.command("delta")
@ORDER
@click.option("--side", type=click.Choice(["left", "right"]), default=None,
              help="Place nominal dependents before/after the noun; omit to give splits.")
@click.option("--s", "s", type=int, default=None, help="|S| (needed by SOV right).")
@click.option("--o", "o", type=int, default=None, help="|O|.")
@click.option("--v", "v", type=int, default=None, help="|V| (needed by SVO).")
@click.option("--lv", type=int, default=0, show_default=True, help="Words before the verb head.")
@click.option("--rs", type=int, default=None, help="Words after the subject head.")
@click.option("--lo", type=int, default=None, help="Words before the object head.")
@click.option("--ro", type=int, default=None, help="Words after the object head.")
@FORMAT
@domain_errors
def appendix_delta(order, side, s, o, v, lv, rs, lo, ro, fmt):
    """Top-level dependency length sum for SOV or SVO."""
    order = WordOrder.parse(order)

    def need(value, flag):
        if value is None:
            raise click.UsageError(f"{flag} is required here")
        return value

    if side is None:
        if order is WordOrder.SOV:
            value = cc.delta_sov(lv, need(ro, "--ro"), need(lo, "--lo"), need(rs, "--rs"))
        else:
            value = cc.delta_svo(need(rs, "--rs"), need(v, "--v"), need(lo, "--lo"))
    elif order is WordOrder.SOV:
        if side == "left":
            value = cc.delta_sov_left(lv, need(o, "--o"))
        else:
            value = cc.delta_sov_right(lv, need(o, "--o"), need(s, "--s"))
    else:
        if side == "left":
            value = cc.delta_svo_left(need(v, "--v"), need(o, "--o"))
        else:
            value = cc.delta_svo_right(need(v, "--v"), need(s, "--s"))
    emit([{"order": order, "side": side or "explicit", "delta": value}], fmt)


@appendix.command("prefer")
@ORDER
@click.option("--s", "s", type=int, required=True)
@click.option("--o", "o", type=int, required=True)
@click.option("--v", "v", type=int, default=1, show_default=True)
@FORMAT
@domain_errors
def appendix_prefer(order, s, o, v, fmt):
    """Cheaper side for dependents of nominal heads."""
    order = WordOrder.parse(order)
    side = cc.preferred_side(order, cc.ConstituentLengths(s, v, o))
    emit([{"order": order, "s": s, "v": v, "o": o, "preferred": side}], fmt)


@appendix.command("regress")
@click.option("--s", "s", type=int, required=True)
@click.option("--o", "o", type=int, required=True)
@click.option("--v", "v", type=int, default=1, show_default=True)
@click.option("--lv", type=int, default=0, show_default=True)
@click.option("--internal-left", default="0,0,0", show_default=True,
              help="omega_S,omega_V,omega_O of the SVO variant with dependents before the noun.")
@click.option("--internal-right", default="0,0,0", show_default=True,
              help="Same for dependents after the noun.")
@FORMAT
@domain_errors
def appendix_regress(s, o, v, lv, internal_left, internal_right, fmt):
    """Cost of SVO -> SOV regression for each nominal-dependent placement."""
    left = cc.InternalCosts(*_floats(internal_left, "--internal-left"))
    right = cc.InternalCosts(*_floats(internal_right, "--internal-right"))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        result = cc.regression_comparison(left, right, cc.ConstituentLengths(s, v, o), lv)
    for w in caught:
        click.echo(f"warning: {w.message}", err=True)
    emit(
        [
            {
                "omega_sov_from_left": result.omega_sov_from_left,
                "omega_sov_from_right": result.omega_sov_from_right,
                "gap": result.gap,
                "harder_from": result.harder_from,
                "conservation_holds": result.conservation_holds,
            }
        ],
        fmt,
    )


def _number(token: str, flag: str):
    try:
        return int(token)
    except ValueError:
        try:
            return float(token)
        except ValueError:
            raise click.UsageError(f"{flag}: cannot parse {token!r}") from None


def _floats(text: str, flag: str):
    values = [_number(t.strip(), flag) for t in text.split(",")]
    if len(values) != 3:
        raise click.UsageError(f"{flag} expects three comma-separated values")
    return values


def _distribution(text: str, flag: str) -> cc.LengthDistribution:
    """``"k"`` is a point mass; ``"k1:p1,k2:p2"`` lists length:probability pairs."""
    pairs = []
    for token in text.split(","):
        length, sep, prob = token.partition(":")
        length = _number(length.strip(), flag)
        try:
            prob = Fraction(prob.strip()) if sep else Fraction(1)
        except (ValueError, ZeroDivisionError):
            raise click.UsageError(f"{flag}: cannot parse probability {prob!r}") from None
        pairs.append((length, prob))
    return cc.LengthDistribution(tuple(pairs))


@appendix.command("expect")
@click.option("--s-dist", required=True, help='e.g. "2" or "1:0.5,3:0.5"')
@click.option("--o-dist", required=True)
@click.option("--v-dist", default="1", show_default=True)
@FORMAT
@domain_errors
def appendix_expect(s_dist, o_dist, v_dist, fmt):
    """Expected SVO delta for random constituent lengths."""
    ds = _distribution(s_dist, "--s-dist")
    do = _distribution(o_dist, "--o-dist")
    dv = _distribution(v_dist, "--v-dist")
    left = cc.expected_delta_svo(ds, do, dv, cc.Side.LEFT)
    right = cc.expected_delta_svo(ds, do, dv, cc.Side.RIGHT)
    emit([{"expected_left": left, "expected_right": right, "difference": left - right}], fmt)


if __name__ == "__main__":  # pragma: no cover
    main()
