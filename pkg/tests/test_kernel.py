from fractions import Fraction as Q

import pytest

from embtrees.errors import DegenerateStepSet, NoRootAtOrigin, SingularRoot
from embtrees.kernel import (
    SeriesPoly,
    characteristic_poly,
    complete_homogeneous,
    fixed_point_solve,
    fuss_catalan,
    hensel_factor_pair,
    hensel_small_factor,
    newton_solve,
)
from embtrees.marker import MarkerSeries
from embtrees.series import Series
from embtrees.steps import StepSet, parse_step_set


def tree_equation(arity: int, order: int) -> SeriesPoly:
    z = Series.z(order)
    one = Series.one(order)
    coeffs = [one, -one] + [Series.zero(order)] * (arity - 2) + [z]
    return SeriesPoly.make(coeffs)


def test_newton_catalan():
    T = newton_solve(tree_equation(2, 8), 1)
    assert [int(c) for c in T.coeffs[:6]] == [1, 1, 2, 5, 14, 42]


def test_newton_ternary():
    T = newton_solve(tree_equation(3, 6), 1)
    assert [int(c) for c in T.coeffs[:5]] == [1, 1, 3, 12, 55]


def test_newton_linear_walker_limit():
    # T = 1 + (w+6) z T at w=2 is the geometric series in 8z
    order = 6
    z = Series.z(order)
    one = Series.one(order)
    eq = SeriesPoly.make([one, z * 8 - one])
    T = newton_solve(eq, 1)
    assert [int(c) for c in T.coeffs[:3]] == [1, 8, 64]


def test_newton_agrees_with_fixed_point():
    T = newton_solve(tree_equation(4, 10), 1)
    low = fixed_point_solve(lambda t: Series.one(10) + Series.z(10) * t**4, 1, 10)
    assert T.matches(low)


def test_newton_rejects_bad_seeds():
    with pytest.raises(NoRootAtOrigin):
        newton_solve(tree_equation(2, 5), 3)
    # T^2 - 2T + 1 has a double root at 1
    order = 5
    one = Series.one(order)
    eq = SeriesPoly.make([one, one * (-2), one])
    with pytest.raises(SingularRoot):
        newton_solve(eq, 1)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_fuss_catalan_matches_tree_equation(d):
    T = newton_solve(tree_equation(d, 12), 1)
    for n in range(12):
        assert T[n] == fuss_catalan(n, d)
        assert fuss_catalan(n, d).denominator == 1


def test_fuss_catalan_values():
    assert fuss_catalan(3, 2) == 5
    assert fuss_catalan(0, 4) == 1
    assert fuss_catalan(4, 3) == 55


def test_dyck_small_branch():
    small = hensel_small_factor(StepSet.make([(-1, 1), (1, 1)]), 9)
    x1 = small.elementary[0]
    assert [int(c) for c in x1.coeffs] == [0, 1, 0, 1, 0, 2, 0, 5, 0]
    one = Series.one(10)
    z = Series.z(10)
    alt = (one - (one - z * z * 4).sqrt()) / (z * 2)
    assert x1.matches(alt)
    # the factor divides the characteristic polynomial: X - z(1 + X^2)
    resid = x1 - Series.z(9) * (Series.one(9) + x1 * x1)
    assert resid.is_zero()


def test_motzkin_small_branch():
    small = hensel_small_factor(StepSet.make([(-1, 1), (0, 1), (1, 1)]), 6)
    assert [int(c) for c in small.elementary[0].coeffs] == [0, 1, 1, 2, 4, 9]


def test_two_branch_factor_reconstructs():
    steps = StepSet.make([(-2, 1), (1, 1)])
    f = characteristic_poly(steps, Series.z(30))
    a, b = hensel_factor_pair(f, 2)
    prod = [Series.zero(30) for _ in range(len(a) + len(b) - 1)]
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            prod[i + j] = prod[i + j] + ai * bj
    assert all((prod[k] - f[k]).is_zero() for k in range(len(f)))
    small = hensel_small_factor(steps, 30)
    assert all(e[0] == 0 for e in small.elementary)


def test_degenerate_step_set():
    with pytest.raises(DegenerateStepSet):
        hensel_small_factor(StepSet.make([(1, 1), (2, 1)]), 5)


def test_complete_homogeneous_single_branch():
    small = hensel_small_factor(StepSet.make([(-1, 1), (1, 1)]), 10)
    h = complete_homogeneous(small, 4)
    x1 = small.elementary[0]
    for f in range(5):
        assert h[f].matches(x1**f)
    assert h[1] == small.elementary[0]


def test_homogeneous_generating_identity():
    # sum_f h_f t^f times prod (1 - X_l t) telescopes to 1
    small = hensel_small_factor(StepSet.make([(-2, 1), (2, 1)]), 20)
    h = complete_homogeneous(small, 20)
    lhs = MarkerSeries.zero(20)
    for f, hf in enumerate(h):
        lhs = lhs + MarkerSeries.series_times_marker(hf, f)
    prod = MarkerSeries.one(20)
    for k in range(1, small.c + 1):
        e = small.elementary[k - 1]
        prod = prod + MarkerSeries.series_times_marker(e if k % 2 == 0 else -e, k)
    total = lhs * prod
    for n in range(20):
        for power, coeff in total.coeffs[n].items():
            if power <= 20:
                assert (n, power, coeff) == (0, 0, Q(1))


def test_power_sums_match_newton_identities():
    small = hensel_small_factor(parse_step_set("-2:1,-1:2,1:1,3:1"), 16)
    p = small.power_sums(6)
    e1, e2 = small.elementary
    assert p[1].matches(e1)
    assert p[2].matches(e1 * e1 - e2 * 2)
    assert p[3].matches(e1**3 - e1 * e2 * 3)
