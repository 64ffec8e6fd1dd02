"""The q-deformed Möbius algebra and its Kazhdan-Lusztig basis.

Products are computed in the orthogonal basis ``y_I = sum_{H >= I} mu(I, H) eps_H``,
where ``eps_F = sum_{I >= F} y_I`` and ``y_I y_J = delta_{IJ} q^crk(I) y_I``.  In that
basis a product is a pointwise product of coefficient vectors, so structure
constants reduce to one unitriangular solve per pair.  ``eps_product`` follows
the defining formula directly and is kept as an independent check.
"""

from __future__ import annotations

import threading
import weakref
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .errors import AntisymmetryViolated
from .families import braid_kl, uniform_kl
from .kl import kl_table
from .lattice import Flat, FlatLattice, braid_blocks, members, to_bits
from .polynomial import IntPoly, LaurentPoly

ONE_Q = IntPoly([1])
ONE_PLUS_Q = IntPoly([1, 1])


class AlgebraElement:
    """Finite sum ``sum c_F eps_F`` (or ``x_F``) over the flats of one lattice."""

    __slots__ = ("lat", "terms")

    def __init__(self, lat: FlatLattice, terms: Mapping[Flat, LaurentPoly] | None = None):
        self.lat = lat
        clean: dict[Flat, LaurentPoly] = {}
        for f, c in (terms or {}).items():
            if f not in lat:
                lat.index_of(f)  # raises FlatNotInLattice
            if isinstance(c, int):
                c = LaurentPoly([c])
            elif isinstance(c, IntPoly):
                c = c.to_laurent()
            if not c.is_zero():
                clean[f] = clean[f] + c if f in clean else c
        self.terms = {f: clean[f] for f in sorted(clean, key=lat.index_of)}

    @classmethod
    def basis(cls, lat: FlatLattice, flat: Flat) -> AlgebraElement:
        return cls(lat, {flat: LaurentPoly([1])})

    def __getitem__(self, flat: Flat) -> LaurentPoly:
        return self.terms.get(flat, LaurentPoly())

    def items(self):
        return self.terms.items()

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        out = dict(self.terms)
        for f, c in other.terms.items():
            out[f] = out[f] + c if f in out else c
        return AlgebraElement(self.lat, out)

    def __neg__(self):
        return AlgebraElement(self.lat, {f: -c for f, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: LaurentPoly | IntPoly | int) -> AlgebraElement:
        if isinstance(c, int):
            c = LaurentPoly([c])
        elif isinstance(c, IntPoly):
            c = c.to_laurent()
        return AlgebraElement(self.lat, {f: v * c for f, v in self.terms.items()})

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        """Product in E_q, expanded bilinearly through ``eps_product``."""
        out: dict[Flat, LaurentPoly] = {}
        for f, a in self.terms.items():
            for g, b in other.terms.items():
                for h, c in eps_product(self.lat, f, g).items():
                    v = a * b * c
                    out[h] = out[h] + v if h in out else v
        return AlgebraElement(self.lat, out)

    def at_q(self, value) -> dict[Flat, object]:
        """Specialise every coefficient at ``q = value``; zero entries dropped."""
        out = {}
        for f, c in self.terms.items():
            v = c(value)
            if v:
                out[f] = v
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.lat is other.lat and self.terms == other.terms

    def __repr__(self):
        parts = [f"({c})*e{members(f)}" for f, c in self.terms.items()]
        return "AlgebraElement(" + " + ".join(parts) + ")"


# per-lattice caches ---------------------------------------------------------


class _Cache:
    def __init__(self, lat: FlatLattice):
        self.lat = lat
        self.lock = threading.Lock()
        self.interval_kl: dict[tuple[int, int], IntPoly] = {}
        self.generic_done: set[int] = set()
        self.x_rows: dict[int, dict[int, IntPoly]] = {}
        self.eps: dict[tuple[int, int], dict[int, LaurentPoly]] = {}


_caches: "weakref.WeakKeyDictionary[FlatLattice, _Cache]" = weakref.WeakKeyDictionary()
_caches_lock = threading.Lock()


def _cache(lat: FlatLattice) -> _Cache:
    c = _caches.get(lat)
    if c is None:
        with _caches_lock:
            c = _caches.setdefault(lat, _Cache(lat))
    return c


# interval KL polynomials -------------------------------------------------------


def _family_interval_kl(lat: FlatLattice, lo: int, hi: int) -> IntPoly | None:
    fam = lat.family
    if fam is None:
        return None
    kind = fam[0]
    if kind == "boolean":
        return ONE_Q
    if kind == "uniform":
        m, d = fam[1], fam[2]
        if hi != len(lat) - 1:
            return ONE_Q  # proper flats are Boolean
        return uniform_kl(m, d - lat.ranks[lo])
    if kind == "braid":
        n = fam[1]
        lo_blocks = braid_blocks(n, lat.flats[lo])
        out = ONE_Q
        for block in braid_blocks(n, lat.flats[hi]):
            inside = sum(1 for b in lo_blocks if b[0] in block)
            out = out * braid_kl(inside)
        return out
    return None


def interval_kl(lat: FlatLattice, lo: int, hi: int, route: str = "auto") -> IntPoly:
    """KL polynomial of the interval ``[lo, hi]`` (flat indices).

    ``route="auto"`` uses the family shortcut when the lattice carries a family
    tag; ``"generic"`` always runs the lattice recursion.
    """
    if not lat.leq_index(lo, hi):
        lat.interval_indices(lo, hi)  # raises NotComparable
    if route not in ("auto", "generic"):
        raise ValueError(f"unknown route {route!r}")
    if route == "auto":
        p = _family_interval_kl(lat, lo, hi)
        if p is not None:
            return p
    cache = _cache(lat)
    key = (lo, hi)
    p = cache.interval_kl.get(key)
    if p is not None:
        return p
    table, _ = kl_table(lat, hi)
    with cache.lock:
        for f, poly in table.items():
            cache.interval_kl.setdefault((f, hi), poly)
    return cache.interval_kl[key]


def _kl_coefficient(lat: FlatLattice, lo: int, hi: int) -> IntPoly:
    """``q^(rk hi - rk lo) P_[lo,hi](q^-2)`` as an ordinary polynomial in ``q``."""
    r = lat.ranks[hi] - lat.ranks[lo]
    p = interval_kl(lat, lo, hi)
    out = [0] * (r + 1)
    for i, c in enumerate(p.coeffs):
        if r - 2 * i < 0:
            raise AntisymmetryViolated(f"degree bound fails on interval ({lo}, {hi}): {p}")
        out[r - 2 * i] += c
    return IntPoly(out)


def _x_row(lat: FlatLattice, f: int) -> dict[int, IntPoly]:
    """``{I: X_F(I)}`` where ``x_F = sum_I X_F(I) y_I``, i.e. ``X_F(I) = sum_{F<=G<=I} a_FG``."""
    cache = _cache(lat)
    row = cache.x_rows.get(f)
    if row is not None:
        return row
    flats = lat.flats
    ups = lat.up_indices(f)
    a = {g: _kl_coefficient(lat, f, g) for g in ups}
    row = {}
    for i in ups:
        top = flats[i]
        total = IntPoly()
        for g in ups:
            if g > i:
                break
            if flats[g] & top == flats[g]:
                total = total + a[g]
        row[i] = total
    with cache.lock:
        return cache.x_rows.setdefault(f, row)


# products -----------------------------------------------------------------


def _eps_product_index(lat: FlatLattice, i: int, j: int) -> dict[int, LaurentPoly]:
    cache = _cache(lat)
    key = (min(i, j), max(i, j))
    hit = cache.eps.get(key)
    if hit is not None:
        return hit
    join = lat.join_index(i, j)
    acc: dict[int, LaurentPoly] = {}
    for mid in lat.up_indices(join):
        crk = lat.rank - lat.ranks[mid]
        for h, mu in lat.mobius_row(mid).items():
            term = LaurentPoly.monomial(crk, mu)
            acc[h] = acc[h] + term if h in acc else term
    res = {h: c for h, c in sorted(acc.items()) if not c.is_zero()}
    with cache.lock:
        return cache.eps.setdefault(key, res)


def eps_product(lat: FlatLattice, F: Flat, G: Flat) -> AlgebraElement:
    """``eps_F * eps_G`` expanded in the standard basis, straight from the definition."""
    i, j = lat.index_of(F), lat.index_of(G)
    res = _eps_product_index(lat, i, j)
    return AlgebraElement(lat, {lat.flats[h]: c for h, c in res.items()})


def unit(lat: FlatLattice) -> AlgebraElement:
    out: dict[Flat, LaurentPoly] = {}
    for f in range(len(lat)):
        crk = lat.rank - lat.ranks[f]
        for g, mu in lat.mobius_row(f).items():
            term = LaurentPoly.monomial(-crk, mu)
            flat = lat.flats[g]
            out[flat] = out[flat] + term if flat in out else term
    return AlgebraElement(lat, out)


def kl_basis_element(lat: FlatLattice, F: Flat) -> AlgebraElement:
    """``x_F`` in the standard basis."""
    f = lat.index_of(F)
    return AlgebraElement(
        lat, {lat.flats[g]: _kl_coefficient(lat, f, g).to_laurent() for g in lat.up_indices(f)}
    )


def expand_in_kl_basis(lat: FlatLattice, a: AlgebraElement) -> dict[Flat, LaurentPoly]:
    """Coefficients ``c_F`` with ``a = sum c_F x_F``, by unitriangular elimination."""
    rest = {lat.index_of(f): c for f, c in a.items()}
    out: dict[Flat, LaurentPoly] = {}
    while rest:
        f = min(rest)
        c = rest.pop(f)
        out[lat.flats[f]] = c
        for g in lat.up_indices(f):
            if g == f:
                continue
            v = c * _kl_coefficient(lat, f, g).to_laurent()
            new = rest[g] - v if g in rest else -v
            if new.is_zero():
                rest.pop(g, None)
            else:
                rest[g] = new
    return out


def _product_index(lat: FlatLattice, i: int, j: int) -> dict[int, IntPoly]:
    xi, xj = _x_row(lat, i), _x_row(lat, j)
    join = lat.join_index(i, j)
    coeffs: dict[int, IntPoly] = {}
    rows: dict[int, dict[int, IntPoly]] = {}
    for mid in lat.up_indices(join):
        val = (xi[mid] * xj[mid]).shift(lat.rank - lat.ranks[mid])
        for h, c in coeffs.items():
            xh = rows[h].get(mid)
            if xh is not None:
                val = val - c * xh
        if not val.is_zero():
            coeffs[mid] = val
            rows[mid] = _x_row(lat, mid)
    return coeffs


def product_in_kl_basis(lat: FlatLattice, F: Flat, G: Flat) -> dict[Flat, LaurentPoly]:
    """``x_F * x_G = sum_H C_FG^H x_H``, returned as ``{H: C_FG^H}`` with zeros dropped."""
    i, j = lat.index_of(F), lat.index_of(G)
    return {lat.flats[h]: c.to_laurent() for h, c in _product_index(lat, i, j).items()}


def structure_constant(lat: FlatLattice, F: Flat, G: Flat, H: Flat) -> LaurentPoly:
    h = lat.index_of(H)
    i, j = lat.index_of(F), lat.index_of(G)
    c = _product_index(lat, i, j).get(h)
    return c.to_laurent() if c is not None else LaurentPoly()


def boolean_product_closed(n: int, F: Iterable[int], G: Iterable[int]) -> dict[frozenset, LaurentPoly]:
    """KL-basis product in the Boolean matroid on ``range(n)``, from the closed formula."""
    F, G = frozenset(F), frozenset(G)
    if not F | G <= set(range(n)):
        raise ValueError(f"subsets must lie in range({n})")
    union, inter = F | G, len(F & G)
    free = sorted(set(range(n)) - union)
    out = {}
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            K = union | frozenset(extra)
            poly = (ONE_PLUS_Q ** (len(K) - inter)).shift(n - len(K))
            out[K] = poly.to_laurent()
    return out


# positivity ---------------------------------------------------------------


@dataclass(frozen=True)
class Finding:
    F: Flat
    G: Flat
    H: Flat
    coefficient: LaurentPoly

    @property
    def negative_exponent(self) -> bool:
        return not self.coefficient.is_polynomial()


def positivity_scan(lat: FlatLattice, first_only: bool = False) -> list[Finding]:
    """All ``(F, G, H)`` with ``F <= G`` in flat order whose ``C_FG^H`` leaves ``N[q]``."""
    found = []
    for i in range(len(lat)):
        for j in range(i, len(lat)):
            for h, c in _product_index(lat, i, j).items():
                lc = c.to_laurent()
                if lc.has_negative_coefficient() or not lc.is_polynomial():
                    found.append(Finding(lat.flats[i], lat.flats[j], lat.flats[h], lc))
                    if first_only:
                        return found
    return found


def flat_from_elements(lat: FlatLattice, elements: Iterable[int]) -> Flat:
    flat = to_bits(elements)
    lat.index_of(flat)
    return flat
