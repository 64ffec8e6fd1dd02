from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matroid_kl import families
from matroid_kl.polynomial import IntPoly
from matroid_kl.series import Series2, geometric

ORDER = 5
small_polys = st.lists(st.integers(-5, 5), max_size=3).map(IntPoly)
series = st.lists(small_polys, max_size=ORDER + 1).map(lambda cs: Series2(cs, ORDER))
no_constant = series.map(lambda s: Series2([IntPoly()] + s.coeffs[1:], ORDER))


def test_truncation():
    s = Series2([1, 2, 3, 4], 2)
    assert s.coeffs == [IntPoly([1]), IntPoly([2]), IntPoly([3])]
    assert s[7] == IntPoly()
    with pytest.raises(ValueError):
        Series2([], -1)


def test_product_truncates():
    u = Series2.u(3)
    assert u**3 == Series2([0, 0, 0, 1], 3)
    assert (u**4).valuation() is None


def test_geometric_series():
    u = Series2.u(6)
    # (1 - u)^-2 = sum (k+1) u^k
    assert geometric(u, 2) == Series2([k + 1 for k in range(7)], 6)
    assert geometric(u, 0) == Series2.one(6)
    with pytest.raises(ValueError):
        geometric(Series2.one(3), 1)


def test_shift_and_divided_derivative():
    s = Series2([1, 1, 1, 1, 1], 4)
    assert s.shift(2)[3] == IntPoly([1])
    d2 = s.divided_derivative(2)
    assert [d2[k] for k in range(3)] == [IntPoly([comb(k + 2, 2)]) for k in range(3)]
    assert Series2([0, 0, 5], 4).shift(-2)[0] == IntPoly([5])
    with pytest.raises(ValueError):
        s.shift(-1)


def test_compose_rejects_constant_term():
    with pytest.raises(ValueError):
        Series2.u(3).compose(Series2.one(3))


@given(series, series, series)
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series)
def test_compose_with_u_is_identity(a):
    assert a.compose(Series2.u(ORDER)) == a


@given(series, series, no_constant)
def test_compose_is_a_ring_map(a, b, h):
    assert (a * b).compose(h) == a.compose(h) * b.compose(h)
    assert (a + b).compose(h) == a.compose(h) + b.compose(h)


@given(no_constant, st.integers(1, 4))
def test_geometric_inverts(x, r):
    one_minus = Series2.one(ORDER) - x
    assert geometric(x, r) * one_minus**r == Series2.one(ORDER)


@given(series)
def test_inverse(a):
    b = Series2([IntPoly([1])] + a.coeffs[1:], ORDER)
    assert b * b.inverse() == Series2.one(ORDER)


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_uniform_gf(m):
    assert families.gf_check_uniform(m, 6)


@pytest.mark.parametrize("order", [1, 2, 5, 8])
def test_braid_gf(order):
    assert families.gf_check_braid(order)


def test_gf_checks_detect_a_wrong_coefficient(monkeypatch):
    real = families.uniform_kl

    def corrupted(m, d):
        p = real(m, d)
        return p + IntPoly.monomial(1) if d == 5 else p

    monkeypatch.setattr(families, "uniform_kl", corrupted)
    assert not families.gf_check_uniform(1, 6)


def test_braid_gf_detects_a_wrong_coefficient(monkeypatch):
    real = families.braid_kl

    def corrupted(n):
        p = real(n)
        return p + IntPoly.monomial(1) if n == 6 else p

    monkeypatch.setattr(families, "braid_kl", corrupted)
    assert not families.gf_check_braid(6)


def test_gf_order_validation():
    with pytest.raises(ValueError):
        families.gf_check_uniform(1, 0)
    with pytest.raises(ValueError):
        families.gf_check_braid(0)
