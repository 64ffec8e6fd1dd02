import json

import pytest
from hypothesis import given, settings

from matroid_kl import lattice as L
from matroid_kl.combinatorics import bell
from matroid_kl.corpus import FANO, GRAPHS
from matroid_kl.errors import (
    FlatNotInLattice,
    InvalidLattice,
    LoopsPresent,
    NotComparable,
    RankOutOfRange,
    SpecParseError,
    TooLarge,
)
from matroid_kl.lattice import (
    Boolean,
    Braid,
    Matrix,
    Uniform,
    braid_flat,
    build_lattice,
    char_poly,
    direct_sum,
    is_modular,
    localization,
    mobius,
    restriction,
    whitney,
)
from matroid_kl.polynomial import IntPoly

from conftest import lattice, matrix_specs, small_lattices
from oracles import brute_flats, brute_mobius, brute_whitney, matrix_rank_fn


def rank_counts(lat):
    out = {}
    for r in lat.ranks:
        out[r] = out.get(r, 0) + 1
    return [out[r] for r in sorted(out)]


def test_boolean_2():
    lat = build_lattice(Boolean(2))
    assert len(lat) == 4 and list(lat.ranks) == [0, 1, 1, 2]


def test_braid_4_counts():
    lat = build_lattice(Braid(4))
    assert len(lat) == bell(4) == 15
    assert rank_counts(lat) == [1, 6, 7, 1]


def test_identity_matrix_is_boolean():
    spec = Matrix(2, 3, 3, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    lat = build_lattice(spec)
    assert len(lat) == 8 and rank_counts(lat) == [1, 3, 3, 1]


def test_parallel_elements_merge():
    spec = Matrix(3, 2, 3, ((1, 2, 0), (0, 0, 1)))  # columns 0 and 1 are parallel
    lat = build_lattice(spec)
    assert rank_counts(lat) == [1, 2, 1]
    assert lat.flats[1] == 0b011


def test_loops_rejected():
    with pytest.raises(LoopsPresent):
        build_lattice(Matrix(2, 2, 2, ((1, 0), (0, 0))))
    with pytest.raises(LoopsPresent):
        build_lattice(L.Graph(2, ((0, 0), (0, 1))))
    with pytest.raises(LoopsPresent):
        build_lattice(Uniform(2, 0))


def test_cap_and_env(monkeypatch):
    with pytest.raises(TooLarge):
        build_lattice(Braid(6), cap=100)
    monkeypatch.setenv("KL_FLAT_CAP", "10")
    with pytest.raises(TooLarge):
        build_lattice(Boolean(4))
    monkeypatch.setenv("KL_FLAT_CAP", "lots")
    with pytest.raises(SpecParseError):
        build_lattice(Boolean(1))


@pytest.mark.parametrize(
    "text, expected",
    [("uniform:1,2", Uniform(1, 2)), ("boolean:3", Boolean(3)), ("braid:5", Braid(5)), (" Braid:4 ", Braid(4))],
)
def test_parse_family_specs(text, expected):
    assert L.parse_spec(text) == expected


@pytest.mark.parametrize("bad", ["uniform:1", "boolean", "braid:0", "zigzag:3", "uniform:-1,2", "boolean:x", "graph:g.txt"])
def test_parse_errors(bad):
    with pytest.raises(SpecParseError):
        L.parse_spec(bad)


def test_parse_files(tmp_path):
    g = tmp_path / "g.txt"
    g.write_text("# triangle\n0 1\n1 2\n0 2\n")
    lat = build_lattice(f"graph:@{g}")
    assert char_poly(lat) == IntPoly.from_roots([1, 2])
    m = tmp_path / "m.txt"
    m.write_text("2 2 3\n1 0 1\n0 1 1\n")
    assert len(build_lattice(f"matrix:@{m}")) == 5
    f = tmp_path / "f.json"
    f.write_text(json.dumps([{"members": [], "rank": 0}, {"members": [0], "rank": 1}, {"members": [1], "rank": 1}, {"members": [0, 1], "rank": 2}]))
    assert len(build_lattice(f"flats:@{f}")) == 4


@pytest.mark.parametrize(
    "body",
    ["4 1 2\n1 1\n", "2 2 2\n1 0\n", "2 1 2\n1 0 1\n", "3 1 2\n1 5\n", "", "2 1\n1\n"],
)
def test_matrix_parse_errors(body):
    with pytest.raises(SpecParseError):
        L.parse_matrix(body)


def test_missing_file():
    with pytest.raises(SpecParseError):
        L.parse_spec("matrix:@/nonexistent/file")


def test_explicit_flats_validation():
    good = [((), 0), ((0,), 1), ((1,), 1), ((2,), 1), ((0, 1, 2), 2)]
    assert len(L.from_explicit_flats(good)) == 5
    # not intersection-closed
    bad = [((), 0), ((0, 1), 1), ((1, 2), 1), ((0, 1, 2), 2)]
    with pytest.raises(InvalidLattice):
        L.from_explicit_flats(bad)
    # not atomistic: the rank-2 flat {0,1} covers only {0}
    with pytest.raises(InvalidLattice):
        L.from_explicit_flats([((), 0), ((0,), 1), ((0, 1), 2)])
    with pytest.raises(LoopsPresent):
        L.from_explicit_flats([((0,), 0), ((0, 1), 1)])
    with pytest.raises(InvalidLattice):
        L.from_explicit_flats([((), 0), ((0,), 1), ((0,), 2)])


def test_explicit_flats_round_trip(corpus_lattices):
    for _, lat in corpus_lattices:
        if lat.size == 0 or len(lat) > 64:
            continue
        data = [(L.members(f), r) for f, r in zip(lat.flats, lat.ranks)]
        again = L.from_explicit_flats(data)
        assert again.flats == lat.flats


@settings(max_examples=40)
@given(matrix_specs(max_cols=6))
def test_flats_match_brute_force(spec):
    expected = brute_flats(spec.cols, matrix_rank_fn(spec))
    lat = build_lattice(spec)
    assert dict(zip(lat.flats, lat.ranks)) == expected


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_graphic_flats_match_brute_force(name):
    spec = GRAPHS[name]
    g = L.GraphicMatroid(spec.vertices, spec.edges)
    lat = build_lattice(spec)
    assert dict(zip(lat.flats, lat.ranks)) == brute_flats(g.size, g.rank)


@pytest.mark.parametrize("n", range(1, 6))
def test_braid_lattice_equals_complete_graph(n):
    edges = tuple(L.braid_edges(n))
    a = build_lattice(Braid(n))
    b = build_lattice(L.Graph(n, edges))
    assert a.flats == b.flats and a.ranks == b.ranks


def test_braid_flat_round_trip():
    n = 5
    for blocks in ([[0, 1], [2, 3, 4]], [[0], [1], [2], [3], [4]], [[0, 1, 2, 3, 4]]):
        assert L.braid_blocks(n, braid_flat(n, blocks)) == blocks


def test_mobius_examples():
    b2 = lattice("boolean:2")
    assert mobius(b2, 0, 0b11) == 1
    u = lattice("uniform:1,2")
    assert mobius(u, 0, u.top) == 2
    for f in u.flats:
        assert mobius(u, f, f) == 1
    with pytest.raises(NotComparable):
        mobius(b2, 0b01, 0b10)
    with pytest.raises(FlatNotInLattice):
        mobius(u, 0, 0b11)


def test_mobius_matches_zeta_inversion(corpus_lattices):
    for _, lat in corpus_lattices:
        if len(lat) > 120:
            continue
        ref = brute_mobius(lat)
        got = {(i, j): v for i in range(len(lat)) for j, v in lat.mobius_row(i).items()}
        assert got == ref


@settings(max_examples=30)
@given(small_lattices())
def test_mobius_defining_identity(lat):
    for i in range(len(lat)):
        row = lat.mobius_row(i)
        for j in row:
            if j == i:
                continue
            total = sum(v for g, v in row.items() if lat.leq_index(g, j))
            assert total == 0


def test_char_poly_examples():
    for n in range(6):
        assert char_poly(lattice(f"boolean:{n}")) == IntPoly([-1, 1]) ** n
    assert char_poly(lattice("uniform:1,2")) == [2, -3, 1]
    b4 = lattice("braid:4")
    flat = braid_flat(4, [[0, 1], [2, 3]])
    assert char_poly(localization(b4, flat)) == IntPoly([-1, 1]) ** 2


@settings(max_examples=30)
@given(small_lattices())
def test_char_poly_properties(lat):
    chi = char_poly(lat)
    assert chi.degree == lat.rank and chi[lat.rank] == 1
    assert all(chi[k] * (-1) ** (lat.rank - k) >= 0 for k in range(lat.rank + 1))
    if lat.rank >= 1:
        assert chi(1) == 0


def test_localization_and_restriction_examples():
    b4 = lattice("braid:4")
    assert len(localization(b4, b4.bottom)) == 1
    loc = localization(b4, b4.top)
    assert loc.flats == b4.flats
    local = localization(b4, braid_flat(4, [[0, 1], [2, 3]]))
    assert rank_counts(local) == [1, 2, 1] and is_modular(local)
    assert restriction(b4, b4.top).rank == 0
    u13 = lattice("uniform:1,3")
    res = restriction(u13, u13.flats[1])
    assert rank_counts(res) == rank_counts(lattice("uniform:1,2"))
    b5 = lattice("braid:5")
    res5 = restriction(b5, braid_flat(5, [[0, 1], [2], [3], [4]]))
    assert rank_counts(res5) == [1, 6, 7, 1]
    with pytest.raises(FlatNotInLattice):
        restriction(b4, 0b11)


def relabel(flat, base, top):
    """Image of ``flat`` in the interval lattice ``[base, top]`` (positions of ``top - base``)."""
    positions = L.members(top & ~base)
    return L.to_bits(k for k, p in enumerate(positions) if flat >> p & 1)


@pytest.mark.parametrize("name", ["braid:4", "uniform:2,3", "boolean:4", "fano"])
def test_interval_compatibility(name):
    lat = lattice(FANO if name == "fano" else name)
    full = lat.top
    for lo in range(len(lat)):
        for hi in lat.up_indices(lo):
            F, G = lat.flats[lo], lat.flats[hi]
            loc = localization(lat, G)
            a = restriction(loc, relabel(F, 0, G))
            res = restriction(lat, F)
            b = localization(res, relabel(G, F, full))
            assert a.flats == b.flats and a.ranks == b.ranks


def test_direct_sum_examples():
    rank0 = lattice("boolean:0")
    u = lattice("uniform:1,2")
    same = direct_sum(rank0, u)
    assert same.flats == u.flats
    b11 = direct_sum(lattice("boolean:1"), lattice("boolean:1"))
    assert b11.flats == lattice("boolean:2").flats
    uu = direct_sum(u, u)
    assert len(uu) == 25 and uu.rank == 4
    with pytest.raises(TooLarge):
        direct_sum(u, u, cap=24)


@settings(max_examples=25)
@given(small_lattices(max_cols=4), small_lattices(max_cols=4))
def test_char_poly_multiplicative(a, b):
    assert char_poly(direct_sum(a, b)) == char_poly(a) * char_poly(b)


def test_whitney_examples():
    b4 = lattice("braid:4")
    assert whitney(b4, "second", 0, 2) == 7
    assert whitney(b4, "first", 0, 1) == -6
    assert whitney(lattice("uniform:1,3"), "second", 0, 0) == 1
    with pytest.raises(RankOutOfRange):
        whitney(b4, "second", 0, 4)
    with pytest.raises(ValueError):
        whitney(b4, "third", 0, 1)


def test_whitney_matches_brute_force(corpus_lattices):
    for _, lat in corpus_lattices:
        if len(lat) > 100:
            continue
        for i in range(lat.rank + 1):
            for j in range(i, lat.rank + 1):
                w = whitney(lat, "first", i, j)
                assert w == brute_whitney(lat, "first", i, j)
                assert w == 0 or (w > 0) == ((j - i) % 2 == 0)
                assert whitney(lat, "second", i, j) == brute_whitney(lat, "second", i, j)


def test_whitney_below_diagonal_is_zero():
    b4 = lattice("braid:4")
    assert whitney(b4, "second", 2, 1) == 0


def test_modularity_examples():
    for n in range(5):
        assert is_modular(lattice(f"boolean:{n}"))
    assert not is_modular(lattice("uniform:1,3"))
    assert is_modular(lattice(FANO))
    assert not is_modular(lattice("braid:4"))
    assert is_modular(lattice("uniform:1,2"))


def test_closure_and_join():
    u = lattice("uniform:1,3")
    assert u.closure([0, 1]) == 0b0011
    assert u.closure(0b0111) == u.top
    i, j = u.index_of(0b0001), u.index_of(0b0010)
    assert u.flats[u.join_index(i, j)] == 0b0011
    assert u.flats[u.meet_index(u.index_of(0b0011), u.index_of(0b0110))] == 0b0010
    with pytest.raises(FlatNotInLattice):
        u.closure([7])


def test_concurrent_mobius_rows_agree():
    from concurrent.futures import ThreadPoolExecutor

    lat = build_lattice(Braid(5))
    with ThreadPoolExecutor(4) as pool:
        rows = list(pool.map(lat.mobius_row, [0] * 8))
    assert all(r == rows[0] for r in rows)
    assert rows[0][len(lat) - 1] == 24  # (-1)^(n-1) (n-1)! for the partition lattice
