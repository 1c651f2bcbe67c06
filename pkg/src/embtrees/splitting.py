"""Exact arithmetic in the root algebra of a small factor.

Given the monic degree-c small factor A(X) with series coefficients, this
module computes in Q[[z]][X_1, ..., X_c] modulo the relations that make
X_1..X_c the (formal) roots of A.  The algebra is a free module of rank
c! over the series ring with basis X_1^{a_1} ... X_c^{a_c}, a_i <= c - i.
Products are reduced with the classical tower of monic relation
polynomials obtained by synthetic division, so no individual root (which
may live in a fractional-power extension) is ever materialized: any
symmetric expression reduces to an honest power series.

Negative root powers are supported through division by the resultant-like
bottom coefficient e_c = (+-) A(0), which has z-valuation exactly 1; the
resulting global z^-shift is tracked per element and compressed away as
soon as coefficients allow.
"""

from __future__ import annotations

from fractions import Fraction

from .kernel import SmallFactor
from .series import Q, Series

_ZERO = Q(0)


class SplitAlgebra:
    def __init__(self, small: SmallFactor):
        self.c = small.c
        self.order = small.order
        self.e = list(small.elementary)
        ec = self.e[-1]
        if self.c >= 1 and ec.valuation() != 1:
            raise ValueError("bottom elementary symmetric function must have valuation 1")
        # Unit u with e_c = z * u, and its inverse, for negative root powers.
        self._ec_unit_inv = Series.one(self.order - 1) / ec.shift_down(1)
        self._caps = tuple(self.c - 1 - g for g in range(self.c))
        self._mono_cache: dict[tuple[int, ...], dict[tuple[int, ...], Series]] = {}
        self._gen_power_cache: dict[tuple[int, int], SAElement] = {}
        self._rules: list[dict[tuple[int, ...], Series]] = []
        self._build_rules()

    # -- relation tower -------------------------------------------------

    def _build_rules(self) -> None:
        """Fill _rules[g]: canonical expansion of X_g^(caps[g]+1)."""
        c = self.c
        one = Series.one(self.order)
        # q(T) for generator 0 is the small factor itself.
        q: list[SAElement] = []
        for k in range(c + 1):
            if k == c:
                q.append(self.from_series(one))
            else:
                j = c - k
                e = self.e[j - 1]
                q.append(self.from_series(e if j % 2 == 0 else -e))
        for g in range(c):
            m = len(q) - 1  # q is monic of degree m = c - g
            rule: dict[tuple[int, ...], Series] = {}
            for k in range(m):
                for exps, s in q[k].coeffs.items():
                    key = list(exps)
                    key[g] += k
                    key_t = tuple(key)
                    cur = rule.get(key_t)
                    rule[key_t] = (-s) if cur is None else cur - s
            self._rules.append({k: v for k, v in rule.items() if not v.is_zero()})
            if g == c - 1:
                break
            # Synthetic division of q by (T - X_g) for the next generator.
            x_g = self.generator(g)
            b = [None] * m
            b[m - 1] = q[m]
            for k in range(m - 1, 0, -1):
                b[k - 1] = q[k] + x_g * b[k]
            q = b

    # -- canonical monomials ---------------------------------------------

    def _canon_monomial(self, exps: tuple[int, ...]) -> dict[tuple[int, ...], Series]:
        """Canonical coordinates of a non-negative monomial."""
        cached = self._mono_cache.get(exps)
        if cached is not None:
            return cached
        over = None
        for g, cap in enumerate(self._caps):
            if exps[g] > cap:
                over = g
                break
        if over is None:
            result = {exps: Series.one(self.order)}
        else:
            step = self._caps[over] + 1
            rest = list(exps)
            rest[over] -= step
            rest_t = tuple(rest)
            result = {}
            rest_canon = self._canon_monomial(rest_t)
            for e1, s1 in self._rules[over].items():
                for e2, s2 in rest_canon.items():
                    combined = tuple(x + y for x, y in zip(e1, e2))
                    prod = s1 * s2
                    for e3, s3 in self._canon_monomial(combined).items():
                        cur = result.get(e3)
                        term = prod * s3
                        result[e3] = term if cur is None else cur + term
            result = {k: v for k, v in result.items() if not v.is_zero()}
        self._mono_cache[exps] = result
        return result

    # -- element constructors ---------------------------------------------

    def zero(self) -> SAElement:
        return SAElement(self, {}, 0)

    def one(self) -> SAElement:
        return self.from_series(Series.one(self.order))

    def from_series(self, s: Series) -> SAElement:
        if s.is_zero():
            return self.zero()
        return SAElement(self, {(0,) * self.c: s}, 0)

    def generator(self, g: int) -> SAElement:
        exps = [0] * self.c
        exps[g] = 1
        return SAElement(self, dict(self._canon_monomial(tuple(exps))), 0)

    def gen_power(self, g: int, k: int) -> SAElement:
        """X_g^k for any integer k (negative powers via e_c division)."""
        key = (g, k)
        cached = self._gen_power_cache.get(key)
        if cached is not None:
            return cached
        if k == 0:
            result = self.one()
        elif k > 0:
            result = self.gen_power(g, k - 1) * self.generator(g)
        else:
            inv = self._gen_inverse(g)
            result = self.gen_power(g, k + 1) * inv
        self._gen_power_cache[key] = result
        return result

    def _gen_inverse(self, g: int) -> SAElement:
        """X_g^-1 = (product of the other roots) / e_c."""
        others = self.one()
        for h in range(self.c):
            if h != g:
                others = others * self.generator(h)
        lifted = {e: s * self._ec_unit_inv for e, s in others.coeffs.items()}
        return SAElement(self, lifted, others.shift + 1)

    def monomial(self, exps) -> SAElement:
        """X_1^exps[0] * ... with arbitrary integer exponents."""
        acc = self.one()
        for g, k in enumerate(exps):
            if k:
                acc = acc * self.gen_power(g, k)
        return acc

    def invert_one_plus(self, u: SAElement) -> SAElement:
        """(1 + u)^-1 for u with positive z-adic size, by Newton doubling."""
        a = self.one() + u
        y = self.one()
        steps = max(4, (self.order + 2).bit_length() + 2)
        for _ in range(steps):
            y = y * (self.from_series(Series.constant(2, self.order)) - a * y)
        residual = a * y - self.one()
        if not residual.is_zero():
            raise ArithmeticError("inversion did not converge; element not a unit")
        return y


class SAElement:
    """dict of basis monomials -> series, with a global z^-shift factor."""

    __slots__ = ("alg", "coeffs", "shift")

    def __init__(self, alg: SplitAlgebra, coeffs: dict, shift: int):
        if any(
            e[g] > alg._caps[g] for e in coeffs for g in range(alg.c)
        ):
            reduced: dict[tuple[int, ...], Series] = {}
            for e, s in coeffs.items():
                for em, sm in alg._canon_monomial(e).items():
                    term = s * sm
                    cur = reduced.get(em)
                    reduced[em] = term if cur is None else cur + term
            coeffs = reduced
        clean = {e: s for e, s in coeffs.items() if not s.is_zero()}
        if clean:
            order = min(s.order for s in clean.values())
            clean = {e: s.truncate(order) for e, s in clean.items()}
            strip = min(shift, min(s.valuation() for s in clean.values()))
            if strip > 0:
                clean = {e: s.shift_down(strip) for e, s in clean.items()}
                shift -= strip
        else:
            shift = 0
        self.alg = alg
        self.coeffs = clean
        self.shift = shift

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def stored_order(self) -> int:
        if not self.coeffs:
            return self.alg.order
        return min(s.order for s in self.coeffs.values())

    def _aligned(self, other: SAElement) -> tuple[dict, dict, int]:
        s = max(self.shift, other.shift)
        a = {
            e: c.shift_up(s - self.shift) if s > self.shift else c
            for e, c in self.coeffs.items()
        }
        b = {
            e: c.shift_up(s - other.shift) if s > other.shift else c
            for e, c in other.coeffs.items()
        }
        return a, b, s

    def __add__(self, other: SAElement) -> SAElement:
        a, b, s = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            cur = out.get(e)
            out[e] = c if cur is None else cur + c
        return SAElement(self.alg, out, s)

    def __neg__(self) -> SAElement:
        return SAElement(
            self.alg, {e: -c for e, c in self.coeffs.items()}, self.shift
        )

    def __sub__(self, other: SAElement) -> SAElement:
        return self + (-other)

    def __mul__(self, other) -> SAElement:
        if isinstance(other, (int, Fraction)):
            return SAElement(
                self.alg,
                {e: c * other for e, c in self.coeffs.items()},
                self.shift,
            )
        if isinstance(other, Series):
            return SAElement(
                self.alg,
                {e: c * other for e, c in self.coeffs.items()},
                self.shift,
            )
        alg = self.alg
        out: dict[tuple[int, ...], Series] = {}
        for ea, ca in self.coeffs.items():
            for eb, cb in other.coeffs.items():
                prod = ca * cb
                combined = tuple(x + y for x, y in zip(ea, eb))
                for em, sm in alg._canon_monomial(combined).items():
                    term = prod * sm
                    cur = out.get(em)
                    out[em] = term if cur is None else cur + term
        return SAElement(alg, out, self.shift + other.shift)

    __rmul__ = __mul__

    def as_series(self, order: int | None = None) -> Series:
        """Extract a symmetric element as a plain series.

        Requires every non-trivial basis coordinate to vanish and the
        basis-1 coordinate to absorb the pending z^-shift.
        """
        c = self.alg.c
        unit = (0,) * c
        for e, s in self.coeffs.items():
            if e != unit and not s.is_zero():
                raise ArithmeticError(f"element is not symmetric: coordinate {e}")
        s = self.coeffs.get(unit)
        if s is None:
            result = Series.zero(self.stored_order - self.shift)
        else:
            result = s.shift_down(self.shift)
        if order is not None:
            result = result.truncate(order)
        return result
