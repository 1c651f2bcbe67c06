"""Algebraic machinery over truncated series.

Three layers live here:

* Newton iteration with order doubling for series roots of polynomial
  equations (plus a plain fixed-point iterator kept as a low-order
  cross-check),
* Hensel-style factorization of a characteristic polynomial into the
  monic "small" factor (the factor that degenerates to X^c at z=0) and
  its unit cofactor,
* symmetric-function plumbing for the small factor: elementary to
  complete homogeneous, and power sums.

The small branches themselves are never represented individually; only
the coefficients of the small factor are first-class, which keeps every
computation inside honest power series even when the branches live in a
fractional-exponent extension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateStepSet, NoRootAtOrigin, SingularRoot
from .series import Q, Series
from .steps import StepSet

_ZERO = Q(0)
_ONE = Q(1)


@dataclass(frozen=True)
class SeriesPoly:
    """Polynomial in one unknown whose coefficients are z-series.

    ``coeffs[k]`` is the coefficient of unknown^k.  All coefficient series
    are truncated to one shared order on construction.
    """

    coeffs: tuple[Series, ...]

    @classmethod
    def make(cls, coeffs) -> SeriesPoly:
        cs = list(coeffs)
        order = min(c.order for c in cs)
        return cls(tuple(c.truncate(order) for c in cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def order(self) -> int:
        return self.coeffs[0].order

    def truncate(self, order: int) -> SeriesPoly:
        return SeriesPoly(tuple(c.truncate(order) for c in self.coeffs))

    def __call__(self, t: Series) -> Series:
        acc = Series.zero(min(self.order, t.order))
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> SeriesPoly:
        if len(self.coeffs) == 1:
            return SeriesPoly((Series.zero(self.order),))
        return SeriesPoly(
            tuple(c * k for k, c in enumerate(self.coeffs) if k >= 1)
        )


def newton_solve(equation: SeriesPoly, t0) -> Series:
    """Unique series root of ``equation`` with constant term ``t0``.

    Requires a simple root at z=0; converges quadratically, doubling the
    known order each step up to the equation's coefficient order.
    """
    order = equation.order
    t0 = Q(t0)
    deriv = equation.derivative()
    f0 = equation(Series.constant(t0, 1))
    if f0[0] != 0:
        raise NoRootAtOrigin(f"value {t0} is not a root of the equation at z=0")
    d0 = deriv(Series.constant(t0, 1))
    if d0[0] == 0:
        raise SingularRoot("derivative vanishes at z=0; root is not simple")
    current = Series.constant(t0, 1)
    prec = 1
    while prec < order:
        prec = min(2 * prec, order)
        t = Series(current.coeffs, prec)
        eq = equation.truncate(prec)
        de = deriv.truncate(prec)
        current = t - eq(t) / de(t)
    return current


def fixed_point_solve(step, t0, order: int, sweeps: int | None = None) -> Series:
    """Iterate ``t <- step(t)`` from the constant t0; low-order cross-check."""
    t = Series.constant(t0, order)
    for _ in range(sweeps if sweeps is not None else order + 1):
        t = step(t).truncate(order)
    return t


def fuss_catalan(n: int, d: int) -> Fraction:
    """binom(d*n, n) / ((d-1)*n + 1), exactly."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if d < 2:
        raise ValueError("arity d must be at least 2")
    return Q(math.comb(d * n, n), (d - 1) * n + 1)


# ---------------------------------------------------------------------------
# Hensel factorization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmallFactor:
    """Monic degree-c factor that reduces to X^c at z=0.

    ``elementary[k-1]`` holds e_k, the k-th elementary symmetric function
    of the factor's roots, so the factor itself is
    X^c - e_1 X^{c-1} + e_2 X^{c-2} - ... + (-1)^c e_c.
    Every e_k has zero constant term.
    """

    c: int
    elementary: tuple[Series, ...]

    @property
    def order(self) -> int:
        return self.elementary[0].order

    def coefficient(self, k: int) -> Series:
        """Coefficient of X^k in the monic factor, 0 <= k <= c."""
        if k == self.c:
            return Series.one(self.order)
        j = self.c - k
        e = self.elementary[j - 1]
        return e if j % 2 == 0 else -e

    def at_one(self) -> Series:
        """The factor evaluated at X=1, i.e. the product of (1 - root)."""
        acc = Series.one(self.order)
        for k, e in enumerate(self.elementary, start=1):
            acc = acc + (e if k % 2 == 0 else -e)
        return acc

    def power_sums(self, m_max: int) -> list[Series]:
        """p_0..p_m_max with p_m the sum of m-th powers of the roots."""
        order = self.order
        e = [Series.one(order)] + list(self.elementary)
        p: list[Series] = [Series.constant(self.c, order)]
        for m in range(1, m_max + 1):
            acc = Series.zero(order)
            for i in range(1, min(m - 1, self.c) + 1):
                term = e[i] * p[m - i]
                acc = acc + (term if i % 2 == 1 else -term)
            if m <= self.c:
                tail = e[m] * m
                acc = acc + (tail if m % 2 == 1 else -tail)
            p.append(acc)
        return p


def hensel_factor_pair(
    f: list[Series], c: int
) -> tuple[list[Series], list[Series]]:
    """Factor F = A*B with A monic of degree c, A = X^c and B = 1 at z=0.

    ``f[k]`` is the coefficient of X^k in F; F must reduce to X^c at z=0.
    The factorization is computed one z-order at a time: with the Bezout
    pair for (X^c, 1) being trivial, the order-n correction splits exactly
    into a low part (degree < c, absorbed by A) and a high part (divisible
    by X^c, absorbed by B).  Each order is exact, so A*B = F holds to the
    full truncation order.
    """
    order = min(s.order for s in f)
    deg = len(f) - 1
    d = deg - c
    for k, s in enumerate(f):
        expected = _ONE if k == c else _ZERO
        if s[0] != expected:
            raise ValueError("polynomial does not reduce to X^c at z=0")
    # a[n][k]: z^n coefficient of the X^k coefficient of A; same for b.
    a = [[_ZERO] * c for _ in range(order)]
    b = [[_ZERO] * (d + 1) for _ in range(order)]
    b[0][0] = _ONE
    for n in range(1, order):
        # r[k] = [z^n] F_k  minus the cross terms of orders 1..n-1.
        r = [f[k][n] for k in range(deg + 1)]
        for i in range(1, n):
            ai = a[i]
            bj = b[n - i]
            for ka in range(c):
                ca = ai[ka]
                if ca == 0:
                    continue
                for kb in range(d + 1):
                    cb = bj[kb]
                    if cb != 0:
                        r[ka + kb] -= ca * cb
        # A_0 = X^c and B_0 = 1 contribute A_n + X^c * B_n at order n.
        for k in range(c):
            a[n][k] = r[k]
        for k in range(d + 1):
            b[n][k] = r[c + k]
    a_series = [Series([a[n][k] for n in range(order)]) for k in range(c)]
    a_series.append(Series.one(order))
    b_series = [Series([b[n][k] for n in range(order)]) for k in range(d + 1)]
    return a_series, b_series


def characteristic_poly(steps: StepSet, z_factor: Series) -> list[Series]:
    """Coefficients of X^c - z_factor * X^c * P(X) as a polynomial in X."""
    c = steps.max_down
    d = steps.max_up
    order = z_factor.order
    coeffs = [Series.zero(order) for _ in range(c + d + 1)]
    coeffs[c] = Series.one(order)
    for b, w in steps.steps:
        coeffs[b + c] = coeffs[b + c] - z_factor * w
    return coeffs


def small_factor_from_poly(f: list[Series], c: int) -> SmallFactor:
    a, _ = hensel_factor_pair(f, c)
    elementary = []
    for k in range(1, c + 1):
        e = a[c - k]
        elementary.append(e if k % 2 == 0 else -e)
    return SmallFactor(c, tuple(elementary))


def hensel_small_factor(steps: StepSet, order: int) -> SmallFactor:
    """Small factor of the step-set characteristic polynomial, mod z^order."""
    if steps.max_down == 0 or steps.max_up == 0:
        raise DegenerateStepSet("factorization needs jumps on both sides of 0")
    f = characteristic_poly(steps, Series.z(order))
    return small_factor_from_poly(f, steps.max_down)


def complete_homogeneous(sf: SmallFactor, f_max: int) -> list[Series]:
    """h_0..h_f_max of the small-factor roots, via the e-to-h recurrence."""
    order = sf.order
    h: list[Series] = [Series.one(order)]
    for f in range(1, f_max + 1):
        acc = Series.zero(order)
        for k in range(1, min(f, sf.c) + 1):
            term = sf.elementary[k - 1] * h[f - k]
            acc = acc + (term if k % 2 == 1 else -term)
        h.append(acc)
    return h
