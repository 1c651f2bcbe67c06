"""Embedded trees of odd arity 2d+1 and even arity 2d.

Odd-arity nodes place their children at offsets -d..d; even-arity nodes
at the odd offsets -(2d-1), ..., -1, 1, ..., 2d-1.  The label-bounded
generating functions T_j are computed by the level recurrence with
boundary rows pinned to 1, by a rational one-parameter closed family
(verified as an exact rational-function identity valid for every level
at once), and by the multi-branch expansion-coefficient tables of the
general solution, checked against the exact level equation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import SizeTooLarge
from .kernel import (
    SeriesPoly,
    SmallFactor,
    characteristic_poly,
    newton_solve,
    small_factor_from_poly,
)
from .multipoly import MultiPoly, RationalFunction
from .series import Q, Series
from .splitting import SAElement, SplitAlgebra
from .steps import StepSet

_ZERO = Q(0)
_NEG_INF = -(10**9)


@dataclass(frozen=True)
class DaryFamily:
    """kind "odd": arity 2d+1, offsets -d..d; kind "even": arity 2d."""

    kind: str
    d: int

    def __post_init__(self):
        if self.kind not in ("odd", "even"):
            raise ValueError("kind must be 'odd' or 'even'")
        if self.d < 1:
            raise ValueError("d must be positive")
        if self.arity < 2:
            raise ValueError("arity must be at least 2")

    @property
    def arity(self) -> int:
        return 2 * self.d + 1 if self.kind == "odd" else 2 * self.d

    @property
    def offsets(self) -> tuple[int, ...]:
        if self.kind == "odd":
            return tuple(range(-self.d, self.d + 1))
        return tuple(
            sorted([2 * l - 1 for l in range(1, self.d + 1)]
                   + [-(2 * l - 1) for l in range(1, self.d + 1)])
        )

    @property
    def branch_count(self) -> int:
        """Number of small characteristic branches: d (odd) or 2d-1 (even)."""
        return self.d if self.kind == "odd" else 2 * self.d - 1

    @property
    def boundary_depth(self) -> int:
        """Rows -1..-depth are pinned to 1."""
        return self.branch_count


def dary_T(fam: DaryFamily, order: int) -> Series:
    """Root series of T = 1 + z T^arity."""
    z = Series.z(order)
    one = Series.one(order)
    coeffs = [one, -one] + [Series.zero(order)] * (fam.arity - 2) + [z]
    return newton_solve(SeriesPoly.make(coeffs), 1)


def dary_Tj_recurrence(fam: DaryFamily, j_max: int, order: int) -> dict[int, Series]:
    """Rows T_-depth..T_j_max of the label-bound system.

    Row j at order n only feels rows up to j + n*d_max, so rows at and
    above j_max + order*d_max are seeded with the unconstrained T.
    """
    offsets = fam.offsets
    d_max = max(offsets)
    depth = fam.boundary_depth
    top = j_max + order * d_max
    t_coeffs = dary_T(fam, order).coeffs
    rows: list[list[Fraction]] = []
    for _ in range(depth):
        rows.append([Q(1)] + [_ZERO] * (order - 1))  # boundary rows
    for _ in range(0, top + 1):
        rows.append([Q(1)] + [_ZERO] * (order - 1))
    # rows[idx] is level j = idx - depth

    def row(j: int):
        return rows[j + depth] if j <= top else t_coeffs

    for n in range(1, order):
        m = n - 1
        new_vals = []
        for j in range(0, top + 1):
            # [z^m] of the product of T_{j+o} over offsets
            acc = [Q(1)] + [_ZERO] * m
            for o in offsets:
                nxt = [_ZERO] * (m + 1)
                src = row(j + o)
                for a in range(m + 1):
                    ca = acc[a]
                    if ca == 0:
                        continue
                    for b in range(m + 1 - a):
                        cb = src[b]
                        if cb != 0:
                            nxt[a + b] += ca * cb
                acc = nxt
            new_vals.append(acc[m])
        for j, val in zip(range(0, top + 1), new_vals):
            rows[j + depth][n] = val
    return {j: Series(rows[j + depth]) for j in range(-depth, j_max + 1)}


# ---------------------------------------------------------------------------
# Characteristic factor and rational parametrization
# ---------------------------------------------------------------------------


def dary_char_factor(fam: DaryFamily, order: int) -> SmallFactor:
    """Small factor of 1 = z T^(arity-1) * sum over offsets of X^o."""
    T = dary_T(fam, order)
    z_factor = Series.z(order) * T ** (fam.arity - 1)
    steps = StepSet.make([(o, 1) for o in fam.offsets if o != 0])
    # the offset-0 term (odd kind) joins the characteristic polynomial too
    f = characteristic_poly(steps, z_factor)
    if 0 in fam.offsets:
        c = steps.max_down
        f[c] = f[c] - z_factor
    return small_factor_from_poly(f, steps.max_down)


def dary_rational_parametrization(
    fam: DaryFamily,
) -> tuple[RationalFunction, RationalFunction]:
    """Exact rational forms T(X) and z(X) satisfying both defining equations.

    Eliminating z between T = 1 + z T^arity and the characteristic
    equation gives, with q = arity - 1 and c the branch count:

        odd:  z T^q = X^d (1-X) / (1-X^(2d+1)),
        even: z T^q = X^(2d-1) (1-X^2) / (1-X^(4d)),

    and in both cases T = A/(A - N) where z T^q = N/A.
    """
    X = MultiPoly.var(("X",), "X")
    one = MultiPoly.const(("X",), 1)
    d = fam.d
    if fam.kind == "odd":
        big_a = one - X ** (2 * d + 1)
        num = X**d * (one - X)
    else:
        big_a = one - X ** (4 * d)
        num = X ** (2 * d - 1) * (one - X**2)
    big_b = big_a - num
    t_of_x = RationalFunction(big_a, big_b)
    q = fam.arity - 1
    z_of_x = RationalFunction(num * big_b**q, big_a ** (q + 1))
    return t_of_x, z_of_x


def one_param_solution(fam: DaryFamily) -> RationalFunction:
    """Level solution T_j/T as a rational function of (X, lam, Y), Y = X^j.

    Numerator exponents are d+1 and 2d+3 (odd) / 3d+4 (even); denominator
    exponents d+2, 2d+2 (odd) / d+3, 3d+2 (even).
    """
    variables = ("X", "lam", "Y")
    d = fam.d
    if fam.kind == "odd":
        up = (d + 1, 2 * d + 3)
        down = (d + 2, 2 * d + 2)
    else:
        up = (d + 1, 3 * d + 4)
        down = (d + 3, 3 * d + 2)

    def factor(e: int) -> MultiPoly:
        return MultiPoly.const(variables, 1) - MultiPoly.monomial(
            variables, (e, 1, 1)
        )

    num = factor(up[0]) * factor(up[1])
    den = factor(down[0]) * factor(down[1])
    return RationalFunction(num, den)


def one_param_residual(fam: DaryFamily) -> MultiPoly:
    """Cleared residual of the level recurrence for the closed family.

    Substituting the rational T(X), z(X) and the closed T_j (with Y
    standing for X^j) into the level recurrence and clearing denominators
    yields one polynomial in (X, lam, Y); it is identically zero iff the
    closed family solves the recurrence for every level and parameter.
    """
    variables = ("X", "lam", "Y")
    one = MultiPoly.const(variables, 1)
    d = fam.d
    sol = one_param_solution(fam)
    if fam.kind == "odd":
        p_a = one - MultiPoly.monomial(variables, (2 * d + 1, 0, 0))
        front = MultiPoly.monomial(variables, (d, 0, 0)) * (
            one - MultiPoly.var(variables, "X")
        )
        prod_offsets = fam.offsets  # includes 0
        own_in_product = True
    else:
        p_a = one - MultiPoly.monomial(variables, (4 * d, 0, 0))
        front = MultiPoly.monomial(variables, (2 * d - 1, 0, 0)) * (
            one - MultiPoly.monomial(variables, (2, 0, 0))
        )
        prod_offsets = fam.offsets  # excludes 0
        own_in_product = False
    p_b = p_a - front

    def shifted(poly: MultiPoly, o: int) -> tuple[MultiPoly, int]:
        """Substitute Y -> X^o Y; negative X powers return a clearing shift."""
        out: dict[tuple[int, ...], Fraction] = {}
        shift = 0
        terms = []
        for (ex, el, ey), c in poly.terms.items():
            new_x = ex + o * ey
            terms.append(((new_x, el, ey), c))
            shift = max(shift, -new_x)
        for (ex, el, ey), c in terms:
            key = (ex + shift, el, ey)
            out[key] = out.get(key, _ZERO) + c
        return MultiPoly(variables, out), shift

    def x_power(k: int) -> MultiPoly:
        return MultiPoly.monomial(variables, (k, 0, 0))

    num_parts = []  # (polynomial, clearing shift) for the three terms
    # term 1: the own-level denominator D(Y) cancels against T_j itself,
    # so only the product-side denominators remain.
    t1 = p_a * sol.num
    s1 = 0
    for o in prod_offsets:
        if o == 0:
            continue
        den_o, sh = shifted(sol.den, o)
        t1 = t1 * den_o
        s1 += sh
    num_parts.append((t1, s1))
    # term 2: -1 * prod over all offsets of D(X^o Y) (even kind also D(Y))
    t2 = p_b
    s2 = 0
    for o in prod_offsets:
        den_o, sh = shifted(sol.den, o)
        t2 = t2 * den_o
        s2 += sh
    if not own_in_product:
        t2 = t2 * sol.den
    num_parts.append((-t2, s2))
    # term 3: - z T^arity-style front * prod of N(X^o Y) (times D(Y) if even)
    t3 = front
    s3 = 0
    for o in prod_offsets:
        num_o, sh = shifted(sol.num, o)
        t3 = t3 * num_o
        s3 += sh
    if not own_in_product:
        t3 = t3 * sol.den
    num_parts.append((-t3, s3))
    s_max = max(s for _, s in num_parts)
    total = MultiPoly.zero(variables)
    for poly, s in num_parts:
        total = total + poly * x_power(s_max - s)
    return total


def verify_one_param(fam: DaryFamily) -> bool:
    """Exact all-level, all-parameter identity check of the closed family."""
    return one_param_residual(fam).is_zero()


# ---------------------------------------------------------------------------
# One-branch expansion coefficients as rational functions
# ---------------------------------------------------------------------------


def _uni(terms: dict[int, Fraction]) -> MultiPoly:
    return MultiPoly(("X",), {(k,): v for k, v in terms.items()})


def _uni_x(k: int) -> MultiPoly:
    return _uni({k: Q(1)})


def dary_alpha_one_param_closed(fam: DaryFamily, n_max: int) -> list[RationalFunction]:
    """Closed single-branch coefficients alpha_1..alpha_n_max (alpha_1 = 1).

    odd:  alpha_n = X^(n-1) (1-X^(n d)) / ((1-X^d)(1-X)^(n-1)(1-X^(d+1))^(n-1))
    even: alpha_n = X^(2(n-1)) (1-X^(n(2d-1)))
                    / ((1-X^(2d-1))(1-X^2)^(n-1)(1-X^(2d+1))^(n-1))
    """
    one = _uni({0: Q(1)})
    d = fam.d
    if fam.kind == "odd":
        step, xpow, lead = d, 1, d + 1
        base_lo = one - _uni_x(1)
    else:
        step, xpow, lead = 2 * d - 1, 2, 2 * d + 1
        base_lo = one - _uni_x(2)
    base_hi = one - _uni_x(lead)
    first = one - _uni_x(step)
    out = []
    for n in range(1, n_max + 1):
        num = _uni_x(xpow * (n - 1)) * (one - _uni_x(n * step))
        den = first * base_lo ** (n - 1) * base_hi ** (n - 1)
        out.append(RationalFunction(num, den))
    return out


def _compositions(total: int, parts: int):
    """Ordered tuples of positive integers with the given sum."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def dary_alpha_one_param_recurrence(
    fam: DaryFamily, n_max: int
) -> list[RationalFunction]:
    """Single-branch coefficients recomputed from the graded recurrence.

    Uses the already-verified lower closed values on the right-hand side
    and accumulates every subset/composition term over one explicit common
    denominator, so polynomial degrees stay linear in n.
    """
    offsets = fam.offsets
    c_down = -min(offsets)
    one = _uni({0: Q(1)})
    alphas: list[RationalFunction] = [RationalFunction(one)]
    d = fam.d
    if fam.kind == "odd":
        step, xpow, lead = d, 1, d + 1
        base_lo = one - _uni_x(1)
    else:
        step, xpow, lead = 2 * d - 1, 2, 2 * d + 1
        base_lo = one - _uni_x(2)
    base_hi = one - _uni_x(lead)
    first = one - _uni_x(step)
    closed_num = [
        _uni_x(xpow * (g - 1)) * (one - _uni_x(g * step))
        for g in range(1, n_max + 1)
    ]
    pair = base_lo * base_hi
    size_cap = min(n_max, len(offsets))
    first_pows = [MultiPoly.const(("X",), 1)]
    pair_pows = [MultiPoly.const(("X",), 1)]
    for _ in range(max(size_cap, n_max) + 1):
        first_pows.append(first_pows[-1] * first)
        pair_pows.append(pair_pows[-1] * pair)

    for n in range(2, n_max + 1):
        l_cap = min(n, len(offsets))
        # common denominator: first^l_cap * pair^n * X^(c_down n)
        acc = MultiPoly.zero(("X",))
        for size in range(2, l_cap + 1):
            sign = 1 if size % 2 == 0 else -1
            cofactor = first_pows[l_cap - size] * pair_pows[size]
            for parts in _compositions(n, size):
                num = cofactor
                for g in parts:
                    num = num * closed_num[g - 1]
                mono_sum = MultiPoly.zero(("X",))
                for combo in itertools.combinations(offsets, size):
                    term_pow = sum(o * g for o, g in zip(combo, parts))
                    mono_sum = mono_sum + _uni_x(term_pow + c_down * n)
                term = num * mono_sum
                acc = acc + (term if sign > 0 else -term)
        rhs = RationalFunction(
            acc, first_pows[l_cap] * pair_pows[n] * _uni_x(c_down * n)
        )
        # divisor: sum over offsets of (X^(o n) - X^o), cleared by X^(c_down n)
        div_num = MultiPoly.zero(("X",))
        for o in offsets:
            div_num = div_num + _uni_x((o + c_down) * n) - _uni_x(o + c_down * n)
        divisor = RationalFunction(div_num, _uni_x(c_down * n))
        alphas.append(rhs / divisor)
    return alphas


# ---------------------------------------------------------------------------
# General multi-branch expansion table
# ---------------------------------------------------------------------------


@dataclass
class MultiAlphaTable:
    """Expansion coefficients indexed by branch multi-indices.

    Entries live in the root algebra of the characteristic small factor;
    the zero index is 0 by convention and unit vectors hold the seeds.
    """

    family: DaryFamily
    bound: int
    algebra: SplitAlgebra
    entries: dict[tuple[int, ...], SAElement] = field(default_factory=dict)

    def entry(self, index: tuple[int, ...]) -> SAElement:
        return self.entries[index]


def _multi_indices(c: int, bound: int):
    """Nonzero multi-indices with |n| <= bound, by increasing weight."""
    out = []
    for total in range(1, bound + 1):
        for combo in itertools.combinations_with_replacement(range(c), total):
            idx = [0] * c
            for k in combo:
                idx[k] += 1
            out.append(tuple(idx))
    return out


def _splits(index: tuple[int, ...], parts: int):
    """Ordered tuples of nonzero multi-indices summing to index."""
    c = len(index)
    if parts == 1:
        if any(index):
            yield (index,)
        return
    ranges = [range(0, k + 1) for k in index]
    for head in itertools.product(*ranges):
        if not any(head):
            continue
        rest = tuple(index[i] - head[i] for i in range(c))
        if sum(rest) < parts - 1:
            continue
        for tail in _splits(rest, parts - 1):
            yield (head,) + tail


def dary_alpha_general(
    fam: DaryFamily, bound: int, seeds: list[Series], order: int
) -> MultiAlphaTable:
    """Fill the expansion table for all multi-indices of weight <= bound.

    Each non-seed entry is the graded piece of the exact level equation:
    the subset sums over offset choices multiply the lower-order entries,
    and the divisor is inverted through the geometric device that makes
    it a unit times -z T^(arity-1).
    """
    c = fam.branch_count
    if len(seeds) != c:
        raise ValueError(f"need {c} seed series")
    # negative offset powers in the subset sums cost at most c_down*bound
    # z-orders before compression wins them back; the unit division behind
    # each table level costs one more order per weight level
    work = order + (-min(fam.offsets) + 1) * bound + 4
    T = dary_T(fam, work)
    zT = Series.z(work) * T ** (fam.arity - 1)
    small = dary_char_factor(fam, work)
    alg = SplitAlgebra(small)
    table = MultiAlphaTable(fam, bound, alg)
    offsets = fam.offsets
    c_down = -min(offsets)
    unit_vectors = []
    for g in range(c):
        idx = [0] * c
        idx[g] = 1
        unit_vectors.append(tuple(idx))
    for g, vec in enumerate(unit_vectors):
        table.entries[vec] = alg.from_series(Series(seeds[g].coeffs, work))
    prod_cache: dict[tuple, SAElement] = {}

    def alpha_product(parts: tuple[tuple[int, ...], ...]) -> SAElement:
        key = tuple(sorted(parts))
        got = prod_cache.get(key)
        if got is None:
            got = table.entries[key[0]]
            for p in key[1:]:
                got = got * table.entries[p]
            prod_cache[key] = got
        return got

    for index in _multi_indices(c, bound):
        if index in table.entries:
            continue
        rhs = alg.zero()
        for size in range(2, min(sum(index), len(offsets)) + 1):
            sign = 1 if size % 2 == 0 else -1
            for combo in itertools.combinations(offsets, size):
                for parts in _splits(index, size):
                    exps = tuple(
                        sum(o * g[k] for o, g in zip(combo, parts))
                        for k in range(c)
                    )
                    term = alpha_product(parts) * alg.monomial(exps)
                    rhs = rhs + (term if sign > 0 else -term)
        # divisor: -1/(z T^q) + sum over offsets of X^(o.n); multiply by
        # -zT^q and clear X^(c_down n) to expose the unit 1 + u.
        lead = alg.monomial(tuple(c_down * k for k in index))
        u = alg.zero()
        for o in offsets:
            if o == -c_down:
                continue
            u = u + alg.monomial(tuple((o + c_down) * k for k in index))
        u = u - SAElement(
            alg,
            {e: s / zT for e, s in lead.coeffs.items()},
            lead.shift,
        )
        inv = alg.invert_one_plus(u)
        table.entries[index] = lead * rhs * inv
    return table


def rho_series(table: MultiAlphaTable, j: int, order: int) -> Series:
    """The symmetric level-j expansion sum as a plain series."""
    if j < 0:
        raise ValueError("rho extraction needs a non-negative level")
    alg = table.algebra
    acc = alg.zero()
    for index, alpha in table.entries.items():
        acc = acc + alpha * alg.monomial(tuple(j * k for k in index))
    return acc.as_series(order)


@dataclass(frozen=True)
class MainEquationReport:
    ok: bool
    first_failure: tuple[int, int] | None  # (level, z-order)


def verify_main_equation(
    fam: DaryFamily,
    bound: int,
    order: int,
    seeds: list[Series] | None = None,
    levels: tuple[int, ...] | None = None,
) -> MainEquationReport:
    """Check the exact level equation for the truncated expansion table.

    With seeds of valuation s the dropped tail has valuation above
    (bound+1)*s, so the residual must vanish through min(order,
    (bound+1)*s) - 1; seeds default to z^(order // (bound+1) + 1).
    """
    c = fam.branch_count
    if seeds is None:
        s_val = order // (bound + 1) + 1
        seeds = [Series.z(order + 4) ** s_val for _ in range(c)]
    table = dary_alpha_general(fam, bound, seeds, order)
    c_down = -min(fam.offsets)
    if levels is None:
        levels = (c_down, c_down + 1)
    max_off = max(fam.offsets)
    T = dary_T(fam, order)
    zT = Series.z(order) * T ** (fam.arity - 1)
    one = Series.one(order)
    lo = min(levels) - c_down
    hi = max(levels) + max_off
    rho = {i: rho_series(table, i, order) for i in range(lo, hi + 1)}
    for j in levels:
        prod = one
        for o in fam.offsets:
            prod = prod * (one - rho[j + o])
        residual = rho[j] - zT * (one - prod)
        val = residual.valuation()
        if val is not None:
            return MainEquationReport(False, (j, val))
    return MainEquationReport(True, None)


# ---------------------------------------------------------------------------
# Enumeration oracle
# ---------------------------------------------------------------------------


def brute_force_dary(fam: DaryFamily, j: int, n_max: int) -> list[Fraction]:
    """Label-bounded counts by structural enumeration over tree shapes.

    Counts trees with root label 0 and every internal label at most j
    (empty slots are unconstrained), sizes 0..n_max.
    """
    if n_max > 8:
        raise SizeTooLarge("d-ary structural enumeration is capped at size 8")
    offsets = fam.offsets
    spectra: list[dict[int, Fraction]] = [{_NEG_INF: Q(1)}]
    for n in range(1, n_max + 1):
        # forests[k][(size, m)]: first k children combined
        forest: dict[tuple[int, int], Fraction] = {(0, _NEG_INF): Q(1)}
        for off in offsets:
            nxt: dict[tuple[int, int], Fraction] = {}
            for (sz, m_f), cf in forest.items():
                for sz_c in range(0, n - sz):
                    for m_c, cc in spectra[sz_c].items():
                        shifted = m_c + off if m_c != _NEG_INF else _NEG_INF
                        key = (sz + sz_c, max(m_f, shifted))
                        nxt[key] = nxt.get(key, _ZERO) + cf * cc
            forest = nxt
        spec: dict[int, Fraction] = {}
        for (sz, m_f), cf in forest.items():
            if sz == n - 1:
                m_root = max(0, m_f) if m_f != _NEG_INF else 0
                spec[m_root] = spec.get(m_root, _ZERO) + cf
        spectra.append(spec)
    return [
        sum((cnt for m, cnt in spec.items() if m <= j), _ZERO) for spec in spectra
    ]
