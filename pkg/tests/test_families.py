from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matroid_kl import families, tables
from matroid_kl.combinatorics import S2, bell, catalan, double_factorial, m_count, partitions, s1
from matroid_kl.errors import IndexOutOfRange, UnsupportedIndex
from matroid_kl.families import (
    braid_char_poly,
    braid_cubic,
    braid_kl,
    braid_linear,
    braid_quadratic,
    braid_whitney,
    localization_char_poly,
    uniform_char_poly,
    uniform_coeff_closed,
    uniform_kl,
)
from matroid_kl.kl import kl_poly
from matroid_kl.lattice import char_poly, whitney
from matroid_kl.polynomial import IntPoly

from conftest import lattice


def test_uniform_examples():
    for n in range(8):
        assert uniform_kl(0, n) == 1
    assert uniform_kl(2, 7) == [1, 75, 288, 84]
    assert uniform_kl(3, 14) == [1, 2363, 86768, 803760, 2384760, 2171988, 420784]
    with pytest.raises(ValueError):
        uniform_kl(-1, 3)


def test_braid_examples():
    assert braid_kl(3) == 1
    assert braid_kl(9) == [1, 219, 6769, 16065]
    assert braid_kl(20).coeffs[-1] == 585243816844111425
    with pytest.raises(ValueError):
        braid_kl(0)


@pytest.mark.parametrize("m", sorted(tables.UNIFORM))
def test_uniform_reference_tables(m):
    for d, coeffs in tables.UNIFORM[m].items():
        assert uniform_kl(m, d) == list(coeffs), (m, d)


def test_braid_reference_table():
    for n, coeffs in tables.BRAID.items():
        assert braid_kl(n) == list(coeffs), n


# d = 0 with m > 0 would be all loops, which lattices reject
@pytest.mark.parametrize("m, d", [(m, d) for m in range(10) for d in range(1, 11 - m)])
def test_uniform_agrees_with_generic_recursion(m, d):
    assert uniform_kl(m, d) == kl_poly(lattice(f"uniform:{m},{d}")).poly


@pytest.mark.parametrize("n", range(1, 9))
def test_braid_agrees_with_generic_recursion(n):
    lat = lattice(f"braid:{n}")
    assert len(lat) == bell(n)
    assert braid_kl(n) == kl_poly(lat).poly


@pytest.mark.parametrize("m, d", [(1, 4), (2, 6), (3, 5)])
def test_uniform_char_poly_matches_lattice(m, d):
    assert uniform_char_poly(m, d) == char_poly(lattice(f"uniform:{m},{d}"))


@pytest.mark.parametrize("n", range(1, 7))
def test_braid_char_poly_matches_lattice(n):
    assert braid_char_poly(n) == char_poly(lattice(f"braid:{n}"))


def test_localization_char_poly():
    assert localization_char_poly((2, 2)) == IntPoly([1, -2, 1])
    assert localization_char_poly((1, 1, 1)) == 1
    # the top flat of Braid(n) has type (n,) and recovers the full chi
    for n in range(1, 7):
        assert localization_char_poly((n,)) == braid_char_poly(n)


@pytest.mark.parametrize("n", range(16))
def test_flat_types_count_to_bell(n):
    assert sum(m_count(lam) for lam in partitions(n)) == bell(n)


def test_braid_whitney_examples():
    assert braid_whitney(4, 0, 2) == 7
    assert braid_whitney(5, 1, 2) == 60
    for n in range(1, 6):
        assert braid_whitney(n, 0, 0) == 1
    with pytest.raises(IndexOutOfRange):
        braid_whitney(4, 2, 1)
    with pytest.raises(IndexOutOfRange):
        braid_whitney(4, 0, 4)


@pytest.mark.parametrize("n", range(1, 9))
def test_stirling_matches_braid_lattice(n):
    lat = lattice(f"braid:{n}")
    for k in range(1, n + 1):
        assert S2(n, k) == whitney(lat, "second", 0, n - k)
        assert s1(n, k) == whitney(lat, "first", 0, n - k)


@pytest.mark.parametrize("n", range(1, 7))
def test_braid_whitney_matches_lattice(n):
    lat = lattice(f"braid:{n}")
    for i in range(n):
        for j in range(i, n):
            assert braid_whitney(n, i, j) == whitney(lat, "second", i, j)


def test_braid_cubic_examples():
    assert braid_cubic(8) == 735
    assert braid_cubic(7) == 0
    assert braid_cubic(12) == 16813720


def test_braid_cubic_alternate_reading_disagrees():
    assert braid_cubic(8, alternate=True) == 27398
    assert braid_cubic(8, alternate=True) != braid_kl(8)[3]


@pytest.mark.parametrize("n", range(1, 21))
def test_low_braid_coefficients(n):
    p = braid_kl(n)
    assert braid_cubic(n) == p[3]
    if n >= 2:
        assert braid_linear(n) == p[1]
    assert braid_quadratic(n) == p[2]


def test_uniform_closed_examples():
    assert uniform_coeff_closed(1, 4, 1) == 5
    assert uniform_coeff_closed(1, 7, 3) == 14
    for m in range(4):
        for d in range(6):
            assert uniform_coeff_closed(m, d, 0) == 1
    with pytest.raises(UnsupportedIndex):
        uniform_coeff_closed(1, 9, 4)


def test_uniform_closed_on_every_table_cell():
    for m, column in tables.UNIFORM.items():
        for d, coeffs in column.items():
            for i in range(4):
                expected = coeffs[i] if i < len(coeffs) else 0
                assert uniform_coeff_closed(m, d, i) == expected, (m, d, i)


@given(st.integers(0, 6), st.integers(0, 16), st.integers(0, 3))
def test_uniform_closed_matches_recursion(m, d, i):
    assert uniform_coeff_closed(m, d, i) == uniform_kl(m, d)[i]


@pytest.mark.parametrize("k", range(1, 9))
def test_catalan_leading_coefficients(k):
    assert uniform_kl(1, 2 * k - 1)[k - 1] == catalan(k)


@pytest.mark.parametrize("k", range(2, 11))
def test_braid_even_leading_coefficients(k):
    p = braid_kl(2 * k)
    assert p.degree == k - 1
    assert p[k - 1] == double_factorial(2 * k - 3) * (2 * k - 1) ** (k - 2)


def test_degree_bounds():
    for m in range(4):
        for d in range(1, 14):
            assert 2 * uniform_kl(m, d).degree < d
    for n in range(2, 16):
        assert 2 * braid_kl(n).degree < n - 1


def test_caches_under_concurrency(monkeypatch):
    monkeypatch.setattr(families, "_braid_cache", {1: IntPoly([1])})
    families._uniform_coeffs.cache_clear()
    work = [("b", n) for n in range(2, 15)] + [("u", m, d) for m in range(3) for d in range(12)]

    def run(job):
        if job[0] == "b":
            return braid_kl(job[1])
        return uniform_kl(job[1], job[2])

    with ThreadPoolExecutor(8) as pool:
        parallel = list(pool.map(run, work * 3))
    serial = [run(job) for job in work * 3]
    assert parallel == serial
    for n in range(2, 15):
        assert braid_kl(n) == list(tables.BRAID[n])
