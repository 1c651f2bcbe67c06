"""Meanders and excursions for one-dimensional weighted step sets.

The closed forms come from the small factor of the step polynomial: the
level-j meander series is the free-walk series times the partial sum of
complete homogeneous symmetric functions of the small branches, weighted
by the product of (1 - branch).  The endpoint-marked refinement divides
each branch by the marker and swaps the free-walk prefactor for its
marked version.  A direct dynamic-programming count over (steps, level)
serves as the independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .kernel import complete_homogeneous, hensel_small_factor
from .marker import MarkerSeries
from .series import Q, Series
from .steps import StepSet

_ZERO = Q(0)


def walks_total(steps: StepSet, order: int) -> Series:
    """Free walks from level 0 ending anywhere: 1/(1 - z P(1))."""
    one = Series.one(order)
    return one / (one - Series.z(order) * steps.total_weight())


@dataclass(frozen=True)
class MeanderGF:
    start_level: int
    plain: Series
    marked: MarkerSeries


def _marked_free_walks(steps: StepSet, order: int) -> MarkerSeries:
    """1/(1 - z P(v)) with v marking the displacement per step."""
    p_of_v = dict(steps.steps)
    coeffs: list[dict[int, Fraction]] = [{0: Q(1)}]
    for _ in range(1, order):
        prev = coeffs[-1]
        nxt: dict[int, Fraction] = {}
        for lvl, cnt in prev.items():
            for b, w in p_of_v.items():
                key = lvl + b
                nxt[key] = nxt.get(key, _ZERO) + cnt * w
        coeffs.append(nxt)
    return MarkerSeries(coeffs)


def meander_gf(steps: StepSet, level: int, order: int) -> MeanderGF:
    """Meanders starting at the given level, plain and endpoint-marked."""
    steps.require_two_sided()
    if level < 0:
        raise ValueError("meanders start at a non-negative level")
    small = hensel_small_factor(steps, order)
    h = complete_homogeneous(small, level)
    h_sum = Series.zero(order)
    for hf in h:
        h_sum = h_sum + hf
    plain = walks_total(steps, order) * h_sum * small.at_one()
    # marked version: every branch is divided by the marker, so h_f gains
    # marker exponent -f and the factor product becomes sum (-1)^k e_k v^-k.
    marked_h = MarkerSeries.zero(order)
    for f, hf in enumerate(h):
        marked_h = marked_h + MarkerSeries.series_times_marker(hf, -f)
    factor = MarkerSeries.one(order)
    for k in range(1, small.c + 1):
        e = small.elementary[k - 1]
        factor = factor + MarkerSeries.series_times_marker(
            e if k % 2 == 0 else -e, -k
        )
    marked = _marked_free_walks(steps, order) * marked_h * factor
    # shift from displacement marking to absolute endpoint level
    shifted = [
        {p + level: c for p, c in d.items()} for d in marked.coeffs
    ]
    return MeanderGF(level, plain, MarkerSeries(shifted))


def excursion_gf(steps: StepSet, level: int, order: int) -> Series:
    """Meanders returning to their start level: the marker slice at start."""
    gf = meander_gf(steps, level, order)
    return gf.marked.extract(level)


def meander_dp(
    steps: StepSet, level: int, order: int
) -> tuple[list[Fraction], list[dict[int, Fraction]]]:
    """Step-by-step count of meanders from the level; the oracle.

    Returns (totals, table) where table[n][k] is the weight of n-step
    paths from the start level to level k staying non-negative, and
    totals[n] sums over k.
    """
    if level < 0:
        raise ValueError("meanders start at a non-negative level")
    table: list[dict[int, Fraction]] = [{level: Q(1)}]
    for _ in range(1, order):
        prev = table[-1]
        nxt: dict[int, Fraction] = {}
        for lvl, cnt in prev.items():
            for b, w in steps.steps:
                dest = lvl + b
                if dest >= 0:
                    nxt[dest] = nxt.get(dest, _ZERO) + cnt * w
        table.append(nxt)
    totals = [sum(d.values(), _ZERO) for d in table]
    return totals, table


@dataclass(frozen=True)
class MeanderCheck:
    ok: bool
    first_mismatch: tuple[int, int] | None  # (level, z-order)


def verify_meander_closed_form(steps: StepSet, j_max: int, order: int) -> MeanderCheck:
    """Closed form against the dynamic program, levels 0..j_max.

    Checks the plain series, the marker specialized at 1, and every
    endpoint slice of the marked series against the DP table.
    """
    for level in range(j_max + 1):
        gf = meander_gf(steps, level, order)
        totals, table = meander_dp(steps, level, order)
        plain_dp = Series(totals)
        if not gf.plain.matches(plain_dp):
            diff = gf.plain - plain_dp
            return MeanderCheck(False, (level, diff.valuation()))
        if not gf.marked.at_one().matches(plain_dp):
            diff = gf.marked.at_one() - plain_dp
            return MeanderCheck(False, (level, diff.valuation()))
        for n in range(order):
            if gf.marked.coeffs[n] != {
                k: v for k, v in table[n].items() if v != 0
            }:
                return MeanderCheck(False, (level, n))
    return MeanderCheck(True, None)
