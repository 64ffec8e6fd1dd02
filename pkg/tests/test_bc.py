from math import comb

import pytest
from hypothesis import given, settings

from matroid_kl.bc import FVector, bc_f_vector, bc_h_poly, dominance_report, h_from_f
from matroid_kl.errors import NegativeHCoefficient
from matroid_kl.lattice import build_lattice

from conftest import lattice, matrix_specs
from oracles import nbc_f_vector


def test_f_vector_examples():
    for n in range(6):
        assert bc_f_vector(lattice(f"boolean:{n}")).counts == tuple(comb(n, k) for k in range(n + 1))
    assert bc_f_vector(lattice("uniform:1,2")).counts == (1, 3, 2)
    f = bc_f_vector(lattice("braid:4"))
    assert f.counts == (1, 6, 11, 6) and f.dimension == 2


def test_f_vector_must_start_with_one():
    with pytest.raises(ValueError):
        FVector((2, 1))


def test_h_examples():
    for d in range(1, 9):
        assert bc_h_poly(lattice(f"uniform:1,{d}")) == [1] * d
    for n in range(6):
        assert bc_h_poly(lattice(f"boolean:{n}")) == 1
    assert bc_h_poly(lattice("braid:4")) == [1, 3, 2]


def test_negative_h_is_an_error(monkeypatch):
    import matroid_kl.bc as bc

    monkeypatch.setattr(bc, "bc_f_vector", lambda lat: FVector((1, 1, 5)))
    with pytest.raises(NegativeHCoefficient):
        bc.bc_h_poly(lattice("uniform:1,2"))


def test_dominance_examples():
    rep = dominance_report(lattice("boolean:3"))
    assert rep.h == 1 and rep.kl == 1 and rep.holds
    rep = dominance_report(lattice("uniform:1,8"))
    assert (rep.h.degree, rep.kl.degree) == (7, 3)
    assert not rep.same_degree and not rep.dominates
    assert rep.shortfalls[0] == (1, 1, 27)
    assert "1 < 27" in rep.summary()
    rep = dominance_report(lattice("braid:4"))
    assert rep.h == [1, 3, 2] and rep.kl == [1, 1]
    assert rep.dominates and not rep.same_degree and not rep.holds


def test_corpus_h_is_nonnegative(corpus_lattices):
    for name, lat in corpus_lattices:
        h = bc_h_poly(lat)
        assert all(c >= 0 for c in h.coeffs), name
        # h(1) counts the facets
        assert h(1) == bc_f_vector(lat).counts[-1], name


def test_random_h_is_nonnegative(random_matrix_lattices):
    for lat in random_matrix_lattices:
        h = bc_h_poly(lat)
        assert all(c >= 0 for c in h.coeffs)
        assert h(1) == bc_f_vector(lat).counts[-1]


@settings(max_examples=60)
@given(matrix_specs(max_cols=9, max_rows=4))
def test_f_vector_matches_enumeration(spec):
    assert list(bc_f_vector(build_lattice(spec)).counts) == nbc_f_vector(spec)


def test_h_from_f_round_trip():
    f = FVector((1, 6, 11, 6))
    h = h_from_f(f, 3)
    # f_{k-1} = sum_i h_i C(d-i, k-i)
    for k in range(4):
        assert sum(h[i] * comb(3 - i, k - i) for i in range(k + 1)) == f[k]
