"""Truncated formal power series with exact rational coefficients.

A :class:`Series` holds the coefficients of a power series modulo z^N,
where N = ``order``.  All arithmetic follows one truncation rule: the
result order is the minimum of the operand orders, and no operation ever
extends precision silently.  Coefficients are :class:`fractions.Fraction`
values, so every computation in the package is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import DivisionByNonUnit, NonUnitConstantTerm

Q = Fraction

_ZERO = Q(0)
_ONE = Q(1)
_TWO = Q(2)


def as_fraction(value) -> Fraction:
    """Coerce an int, string like ``"3/7"``, or Fraction to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Q(value)
    if isinstance(value, str):
        return Q(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rational_sqrt(q: Fraction) -> Fraction:
    """Exact square root of a perfect-square rational; raises otherwise."""
    if q < 0:
        raise NonUnitConstantTerm(f"{q} is negative, no rational square root")
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        raise NonUnitConstantTerm(f"{q} is not the square of a rational")
    return Q(rn, rd)


class Series:
    """Formal power series known modulo z^order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order: int | None = None):
        cs = [as_fraction(c) for c in coeffs]
        if order is not None:
            if order < 1:
                raise ValueError("series order must be positive")
            if len(cs) < order:
                cs.extend([_ZERO] * (order - len(cs)))
            else:
                cs = cs[:order]
        if not cs:
            raise ValueError("series needs at least one coefficient")
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls([_ZERO], order)

    @classmethod
    def one(cls, order: int) -> Series:
        return cls([_ONE], order)

    @classmethod
    def constant(cls, value, order: int) -> Series:
        return cls([as_fraction(value)], order)

    @classmethod
    def z(cls, order: int) -> Series:
        """The series z itself."""
        return cls([_ZERO, _ONE], order)

    # -- basic accessors ----------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if zero mod z^N."""
        for n, c in enumerate(self.coeffs):
            if c != 0:
                return n
        return None

    def truncate(self, order: int) -> Series:
        if order > len(self.coeffs):
            raise ValueError("cannot extend precision by truncation")
        return Series(self.coeffs[:order])

    def matches(self, other: Series) -> bool:
        """Equality at the minimum of the two orders (the comparable range)."""
        n = min(len(self.coeffs), len(other.coeffs))
        return self.coeffs[:n] == other.coeffs[:n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if len(self.coeffs) > 8 else ""
        return f"Series(order={len(self.coeffs)}, [{head}{tail}])"

    # -- ring operations ----------------------------------------------

    def _coerce(self, other) -> Series | None:
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            return Series.constant(other, len(self.coeffs))
        return None

    def __add__(self, other) -> Series:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        n = min(len(self.coeffs), len(rhs.coeffs))
        return Series([self.coeffs[k] + rhs.coeffs[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series([-c for c in self.coeffs])

    def __sub__(self, other) -> Series:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        n = min(len(self.coeffs), len(rhs.coeffs))
        return Series([self.coeffs[k] - rhs.coeffs[k] for k in range(n)])

    def __rsub__(self, other) -> Series:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs - self

    def __mul__(self, other) -> Series:
        if isinstance(other, (int, Fraction)):
            q = as_fraction(other)
            return Series([c * q for c in self.coeffs])
        if not isinstance(other, Series):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        n = min(len(a), len(b))
        out = [_ZERO] * n
        for i in range(n):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(n - i):
                bj = b[j]
                if bj != 0:
                    out[i + j] += ai * bj
        return Series(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Series:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return _divide(self, rhs)

    def __rtruediv__(self, other) -> Series:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return _divide(lhs, self)

    def __pow__(self, k: int) -> Series:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return _divide(Series.one(len(self.coeffs)), self) ** (-k)
        result = Series.one(len(self.coeffs))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- z-power shifts ------------------------------------------------

    def shift_up(self, k: int) -> Series:
        """Multiply by z^k.  Precision genuinely extends to order+k."""
        if k < 0:
            raise ValueError("shift_up needs k >= 0")
        return Series((_ZERO,) * k + self.coeffs)

    def shift_down(self, k: int) -> Series:
        """Divide by z^k; requires valuation >= k.  Order shrinks by k."""
        if k == 0:
            return self
        if any(c != 0 for c in self.coeffs[:k]):
            raise DivisionByNonUnit(f"valuation below {k}, cannot divide by z^{k}")
        if len(self.coeffs) <= k:
            raise DivisionByNonUnit("no precision left after cancelling valuation")
        return Series(self.coeffs[k:])

    # -- analytic-style operations ------------------------------------

    def sqrt(self) -> Series:
        """Square root of a series with constant term 1 (branch with +1)."""
        a = self.coeffs
        if a[0] != 1:
            raise NonUnitConstantTerm(f"constant term {a[0]} != 1")
        n = len(a)
        out = [_ONE] + [_ZERO] * (n - 1)
        for m in range(1, n):
            acc = a[m]
            for i in range(1, m):
                if out[i] != 0 and out[m - i] != 0:
                    acc -= out[i] * out[m - i]
            out[m] = acc / _TWO
        return Series(out)


def _divide(a: Series, b: Series) -> Series:
    """a / b with valuation cancellation; order shrinks by the cancelled power."""
    vb = b.valuation()
    if vb is None:
        raise DivisionByNonUnit("division by a series that is zero to its order")
    if vb > 0:
        va = a.valuation()
        if va is not None and va < vb:
            raise DivisionByNonUnit(
                f"numerator valuation {va} below denominator valuation {vb}"
            )
        if min(len(a.coeffs), len(b.coeffs)) <= vb:
            raise DivisionByNonUnit("no precision left after cancelling valuation")
        ac = a.coeffs[vb:]
        bc = b.coeffs[vb:]
    else:
        ac = a.coeffs
        bc = b.coeffs
    n = min(len(ac), len(bc))
    inv0 = _ONE / bc[0]
    out = [_ZERO] * n
    for m in range(n):
        acc = ac[m] if m < len(ac) else _ZERO
        for i in range(1, m + 1):
            bi = bc[i]
            if bi != 0 and out[m - i] != 0:
                acc -= bi * out[m - i]
        out[m] = acc * inv0
    return Series(out)


def geometric(ratio: Series) -> Series:
    """1/(1 - ratio) for a ratio with zero constant term."""
    one = Series.one(ratio.order)
    return one / (one - ratio)
