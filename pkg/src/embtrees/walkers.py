"""Three non-crossing walkers and quarter-plane pairs.

Lock-step walkers move simultaneously with steps +-1; a star state is the
pair of half-gaps (a, b) between consecutive walkers.  The refined count
weights every (pair, time) co-location by u and every legal shared edge
by w: the leading pair may share down-steps, the trailing pair up-steps.
The boundary families are the corners (u,w) = (0,0) never-touching,
(1,0) touch-but-never-share, (1,1) touching with the legal shares free.
Random-turn walkers move one at a time; the quarter-plane families count
two-dimensional paths and coincide with random-turn osculating walkers
for the six-step set.  Every closed form is checked against the gap
dynamic program.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import BoundaryCheckFailed
from .kernel import SeriesPoly, newton_solve
from .series import Q, Series, as_fraction

_ZERO = Q(0)
_BOUNDARIES = ("vicious", "osculating", "updown")


@dataclass(frozen=True)
class WalkerModel:
    mode: str  # "lock_step" or "random_turn"
    steps: str  # "dyck" or "motzkin"
    boundary: str
    u: Fraction | None = None  # co-location mark (lock-step refined)
    w: Fraction | None = None  # shared-edge mark (lock-step refined)

    def __post_init__(self):
        if self.mode not in ("lock_step", "random_turn"):
            raise ValueError("mode must be lock_step or random_turn")
        if self.steps not in ("dyck", "motzkin"):
            raise ValueError("steps must be dyck or motzkin")
        if self.boundary not in _BOUNDARIES and self.boundary != "refined":
            raise ValueError(f"boundary must be one of {_BOUNDARIES} or refined")
        if self.boundary == "updown" and self.mode != "lock_step":
            raise ValueError("up-down walkers are a lock-step model")
        if self.mode == "lock_step" and self.steps != "dyck":
            raise ValueError("lock-step walkers use dyck steps")
        if self.boundary == "refined" and (self.u is None or self.w is None):
            raise ValueError("refined boundary needs both marks")


@dataclass(frozen=True)
class StarGF:
    i: int
    j: int
    series: Series


# ---------------------------------------------------------------------------
# Lock-step closed forms
# ---------------------------------------------------------------------------


def lockstep_x(diag_weight, order: int) -> Series:
    """X = z(2 + (2+w)X + 2X^2), the decay rate of the gap recurrence."""
    dw = as_fraction(diag_weight)
    z = Series.z(order)
    one = Series.one(order)
    eq = SeriesPoly.make([z * 2, z * (2 + dw) - one, z * 2])
    return newton_solve(eq, 0)


def lockstep_T(diag_weight, order: int) -> Series:
    dw = as_fraction(diag_weight)
    one = Series.one(order)
    return one / (one - Series.z(order) * (dw + 6))


def lockstep_general(
    diag_weight, i: int, j: int, alpha: Series, beta: Series, gamma: Series, order: int
) -> StarGF:
    """T * (1 - alpha X^i - beta X^j - gamma X^(i+j))."""
    X = lockstep_x(diag_weight, order)
    T = lockstep_T(diag_weight, order)
    one = Series.one(order)
    series = T * (
        one
        - alpha.truncate(order) * X**i
        - beta.truncate(order) * X**j
        - gamma.truncate(order) * X ** (i + j)
    )
    return StarGF(i, j, series)


def lockstep_adapt(boundary: str, order: int) -> tuple[Series, Series, Series]:
    """Adapted (alpha, beta, gamma) at diagonal weight 2, verified.

    vicious: (1, 1, -1); osculating: (3X/(1+2X), same, -3X/(2+X));
    up-down: (2X/(1+X), same, -X).  The corresponding boundary equations
    are re-checked as series identities before returning.
    """
    X = lockstep_x(2, order)
    one = Series.one(order)
    z = Series.z(order)
    T = lockstep_T(2, order)
    if boundary == "vicious":
        alpha = beta = one
        gamma = -one
        checks = [alpha - one, beta - one, alpha + gamma]
    elif boundary == "osculating":
        alpha = beta = X * 3 / (one + X * 2)
        gamma = -(X * 3) / (one + X * Q(1, 2)) * Q(1, 2)
        # j-free part: T(1-alpha) = 1 + 2zT(1 - alpha X)
        checks = [
            T * (one - alpha) - one - z * T * (one - alpha * X) * 2,
            # X^j part, cleared by X: (alpha+gamma) X = z(alpha(X+1) + gamma(X+X^2))
            (alpha + gamma) * X
            - z * (alpha * (X + one) + gamma * (X + X * X)),
        ]
    elif boundary == "updown":
        alpha = beta = X * 2 / (one + X)
        gamma = -X
        checks = [
            T * (one - alpha) - one - z * T * (one * 2 - alpha - alpha * X) * 2,
            (alpha + gamma) * X
            - z * (alpha * (X * 2 + X * X + one) + gamma * (X + X * X) * 2),
        ]
    else:
        raise ValueError(f"unknown boundary {boundary!r}")
    for k, residual in enumerate(checks):
        if not residual.is_zero():
            raise BoundaryCheckFailed(
                f"{boundary} boundary equation {k} has residual {residual!r}"
            )
    return alpha, beta, gamma


def lockstep_star(boundary: str, i: int, j: int, order: int) -> StarGF:
    """Closed star series for the three lock-step boundary models (w=2)."""
    alpha, beta, gamma = lockstep_adapt(boundary, order)
    return lockstep_general(2, i, j, alpha, beta, gamma, order)


def lockstep_refined(u, w, i: int, j: int, order: int) -> StarGF:
    """Refined star series with co-location mark u and shared-edge mark w."""
    u, w = as_fraction(u), as_fraction(w)
    X = lockstep_x(2, order)
    one = Series.one(order)
    sq = (one + X) ** 2
    alpha = (sq - (one - X + X * X + X * w) * u) / (sq - X * (X + w) * u)
    ratio_num = (one + X) * 2 - (one + X * w) * u
    ratio_den = (one + X) * 2 - X * (1 + w) * u
    gamma = -(alpha * ratio_num / ratio_den)
    return lockstep_general(2, i, j, alpha, alpha, gamma, order)


# ---------------------------------------------------------------------------
# Random-turn closed forms
# ---------------------------------------------------------------------------


def randomturn_x(steps: str, order: int) -> Series:
    """dyck: X = 2z(1+X+X^2); motzkin: X = z(2+5X+2X^2)."""
    z = Series.z(order)
    one = Series.one(order)
    if steps == "dyck":
        eq = SeriesPoly.make([z * 2, z * 2 - one, z * 2])
    elif steps == "motzkin":
        eq = SeriesPoly.make([z * 2, z * 5 - one, z * 2])
    else:
        raise ValueError("steps must be dyck or motzkin")
    return newton_solve(eq, 0)


def randomturn_gf(steps: str, boundary: str, i: int, j: int, order: int) -> StarGF:
    """Vicious stars (1-X^i)(1-X^j) T; osculating stars shift both gaps by 1."""
    if boundary == "osculating":
        inner = randomturn_gf(steps, "vicious", i + 1, j + 1, order)
        return StarGF(i, j, inner.series)
    if boundary != "vicious":
        raise ValueError("random-turn boundaries are vicious or osculating")
    X = randomturn_x(steps, order)
    one = Series.one(order)
    total = 6 if steps == "dyck" else 9
    T = one / (one - Series.z(order) * total)
    return StarGF(i, j, T * (one - X**i) * (one - X**j))


# ---------------------------------------------------------------------------
# Gap dynamic programs
# ---------------------------------------------------------------------------


def _lockstep_transitions(u: Fraction, w: Fraction):
    """All legal (delta_a, delta_b, weight-factory) lock-step moves.

    Returns a function mapping a state (a, b) to a list of
    (a', b', step_weight); the co-location factor for the NEW state is
    applied by the caller so that each (pair, time) touch counts once.
    """
    moves = list(itertools.product((-1, 1), repeat=3))

    def legal(state):
        a, b = state
        out = []
        for m1, m2, m3 in moves:
            weight = Q(1)
            ok = True
            for gap, lo, hi, share_dir in ((a, m1, m2, -1), (b, m2, m3, 1)):
                if gap == 0:
                    if (lo, hi) == (-1, 1):
                        pass  # departure
                    elif lo == hi == share_dir:
                        weight *= w  # legal shared edge
                    else:
                        ok = False  # crossing or illegal share
                        break
            if not ok:
                continue
            na = a + (m2 - m1) // 2
            nb = b + (m3 - m2) // 2
            if na < 0 or nb < 0:
                continue
            out.append((na, nb, weight))
        return out

    return legal


def lockstep_dp_table(u, w, order: int) -> list[dict[tuple[int, int], Fraction]]:
    """Value-iteration tables: table[n][(a, b)] counts n-step continuations.

    The start-state co-location factor is NOT included here; one table
    serves every star cell.  Gaps beyond order+2 saturate (they cannot
    influence coefficients below the order).
    """
    u, w = as_fraction(u), as_fraction(w)
    band = order + 2
    legal = _lockstep_transitions(u, w)
    states = [(a, b) for a in range(band + 1) for b in range(band + 1)]
    moves = {}
    for state in states:
        moves[state] = [
            (min(na, band), min(nb, band), sw * u ** ((na == 0) + (nb == 0)))
            for na, nb, sw in legal(state)
        ]
    table = [{s: Q(1) for s in states}]
    for _ in range(1, order):
        prev = table[-1]
        table.append(
            {
                s: sum((sw * prev[(na, nb)] for na, nb, sw in moves[s]), _ZERO)
                for s in states
            }
        )
    return table


def lockstep_dp(u, w, i: int, j: int, order: int) -> list[Fraction]:
    """Refined lock-step star counts by gap dynamic programming.

    weight(configuration) = u^(number of (pair, time) co-locations,
    start included) * w^(number of shared edges).
    """
    u = as_fraction(u)
    table = lockstep_dp_table(u, w, order)
    start_factor = u ** ((i == 0) + (j == 0))
    band = order + 2
    key = (min(i, band), min(j, band))
    return [start_factor * table[n][key] for n in range(order)]


def randomturn_dp_table(
    steps: str, boundary: str, order: int
) -> list[dict[tuple[int, int], Fraction]]:
    """table[n][(a, b)]: n-step random-turn continuations from gaps (a, b)."""
    step_choices = (1, -1) if steps == "dyck" else (1, 0, -1)
    floor = 1 if boundary == "vicious" else 0
    band = order + 2
    states = [
        (a, b)
        for a in range(floor, band + 1)
        for b in range(floor, band + 1)
    ]
    moves: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for a, b in states:
        dest = []
        for walker in (1, 2, 3):
            for s in step_choices:
                if walker == 1:
                    na, nb = a - s, b
                elif walker == 2:
                    na, nb = a + s, b - s
                else:
                    na, nb = a, b + s
                if na >= floor and nb >= floor:
                    dest.append((min(na, band), min(nb, band)))
        moves[(a, b)] = dest
    table = [{s: Q(1) for s in states}]
    for _ in range(1, order):
        prev = table[-1]
        table.append(
            {s: sum((prev[d] for d in moves[s]), _ZERO) for s in states}
        )
    return table


def randomturn_dp(
    steps: str, boundary: str, i: int, j: int, order: int
) -> list[Fraction]:
    """Random-turn star counts: one walker moves per time step."""
    if boundary == "vicious" and (i < 1 or j < 1):
        return [_ZERO] * order
    table = randomturn_dp_table(steps, boundary, order)
    band = order + 2
    key = (min(i, band), min(j, band))
    return [table[n][key] for n in range(order)]


def walker_dp(model: WalkerModel, i: int, j: int, order: int) -> list[Fraction]:
    """Oracle counts for any walker model."""
    if model.mode == "lock_step":
        corners = {"vicious": (0, 0), "osculating": (1, 0), "updown": (1, 1)}
        if model.boundary == "refined":
            u, w = model.u, model.w
        else:
            u, w = corners[model.boundary]
        return lockstep_dp(u, w, i, j, order)
    return randomturn_dp(model.steps, model.boundary, i, j, order)


# ---------------------------------------------------------------------------
# Quarter-plane pairs
# ---------------------------------------------------------------------------

QUARTER_PLANE_STEPS = {
    "S1": ((-1, 0), (0, 1), (1, -1)),
    "S2": ((-1, 0), (0, 1), (1, 0), (0, -1), (-1, 1), (1, -1)),
}


def quarterplane_gf(model: str, i: int, j: int, order: int) -> Series:
    """(1 - X^(i+1))(1 - X^(j+1)) / (1 - kz) with X = kz(1+X+X^2)."""
    if model == "S1":
        scale = 1
    elif model == "S2":
        scale = 2
    else:
        raise ValueError("model must be S1 or S2")
    z = Series.z(order)
    one = Series.one(order)
    eq = SeriesPoly.make([z * scale, z * scale - one, z * scale])
    X = newton_solve(eq, 0)
    T = one / (one - z * (3 * scale))
    return T * (one - X ** (i + 1)) * (one - X ** (j + 1))


def quarterplane_dp(model: str, i: int, j: int, order: int) -> list[Fraction]:
    """Direct 2-D walk count from (i, j) staying in the quarter plane."""
    steps = QUARTER_PLANE_STEPS[model]
    values: dict[tuple[int, int], Fraction] = {}
    bound_x = i + order + 1
    bound_y = j + order + 1
    for x in range(bound_x + 1):
        for y in range(bound_y + 1):
            values[(x, y)] = Q(1)
    out = [Q(1)]
    for _ in range(1, order):
        nxt: dict[tuple[int, int], Fraction] = {}
        for (x, y) in values:
            acc = _ZERO
            for dx, dy in steps:
                nx, ny = x + dx, y + dy
                if nx >= 0 and ny >= 0 and (nx, ny) in values:
                    acc += values[(nx, ny)]
            nxt[(x, y)] = acc
        values = nxt
        out.append(values[(i, j)])
    return out
