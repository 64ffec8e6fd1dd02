"""Kazhdan-Lusztig polynomials of matroids from the lattice of flats.

The polynomial of a loopless matroid ``M`` is the unique ``P`` with ``P = 1`` in
rank 0, ``deg P < rk M / 2`` otherwise, and

    t^rk(M) P(1/t) = sum over flats F of chi_{M_F}(t) P_{M^F}(t)

where ``M_F`` is the interval ``[bottom, F]`` and ``M^F`` the interval ``[F, top]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import AntisymmetryViolated, RankZero, UnsupportedIndex
from .lattice import FlatLattice, interval_whitney
from .polynomial import ONE, IntPoly


@dataclass(frozen=True)
class KLResult:
    poly: IntPoly
    lattice_size: int
    cache_hits: int = 0

    def __post_init__(self):
        if self.poly[0] != 1:
            raise AntisymmetryViolated(f"constant term of {self.poly} is not 1")


def solve_from_remainder(remainder: IntPoly, rank: int) -> IntPoly:
    """Given ``R = t^r P(1/t) - P`` with ``deg P < r/2``, return ``P``.

    Raises ``AntisymmetryViolated`` unless ``t^r R(1/t) = -R``, which is exactly
    the condition for such a ``P`` to exist.
    """
    if rank == 0:
        if not remainder.is_zero():
            raise AntisymmetryViolated(f"rank 0 but remainder {remainder} is nonzero")
        return ONE
    if remainder.degree > rank or remainder.reverse(rank) != -remainder:
        raise AntisymmetryViolated(f"remainder {remainder} is not antisymmetric in degree {rank}")
    return -remainder.truncate((rank + 1) // 2)


def kl_table(lat: FlatLattice, hi: int | None = None) -> tuple[dict[int, IntPoly], int]:
    """KL polynomials of every upper interval ``[F, hi]`` with ``F <= hi``.

    Returns ``({index of F: P_[F,hi]}, cache_hits)``.  Flats are handled in
    decreasing rank, so each interval only uses polynomials already in the table.
    The sum over ``G`` of ``chi_[F,G] P_[G,hi]`` is regrouped by the middle flat
    ``H`` of ``chi_[F,G] = sum mu(F,H) t^(rk G - rk H)``, using the partial sums
    ``up[H] = sum over G in [H, hi] of t^(rk G - rk H) P_[G,hi]``.
    """
    if hi is None:
        hi = len(lat) - 1
    flats, ranks = lat.flats, lat.ranks
    top_bits = flats[hi]
    below = lat.down_indices(hi)
    table: dict[int, IntPoly] = {}
    up: dict[int, IntPoly] = {}
    hits = 0
    for f in reversed(below):
        if f == hi:
            table[f] = ONE
            up[f] = ONE
            continue
        rf = ranks[f]
        strict = IntPoly()  # sum over G in (F, hi] of t^(rk G - rk F) P_G
        remainder = IntPoly()
        for h, mu in lat.mobius_row(f).items():
            if h == f or flats[h] & top_bits != flats[h]:
                continue
            strict = strict + table[h].shift(ranks[h] - rf)
            remainder = remainder + up[h] * mu
            hits += 2
        remainder = remainder + strict
        p = solve_from_remainder(remainder, ranks[hi] - rf)
        table[f] = p
        up[f] = strict + p
    return table, hits


def kl_poly(lat: FlatLattice) -> KLResult:
    table, hits = kl_table(lat)
    p = table[0]
    r = lat.rank
    if r > 0 and 2 * p.degree >= r:
        raise AntisymmetryViolated(f"degree bound violated: {p} in rank {r}")
    return KLResult(p, len(lat), hits)


def defining_rhs(lat: FlatLattice, p_bottom: IntPoly) -> IntPoly:
    """Right side of the defining recursion, with ``p_bottom`` in place of ``P_M``."""
    table, _ = kl_table(lat)
    total = p_bottom
    for f in range(1, len(lat)):
        total = total + lat.char_poly_index(0, f) * table[f]
    return total


def check_defining_identity(lat: FlatLattice, p: IntPoly) -> bool:
    if p.degree > lat.rank:
        return False
    return p.reverse(lat.rank) == defining_rhs(lat, p)


def cancellation_sum(lat: FlatLattice) -> IntPoly:
    """``sum_F t^rk(F) chi_{M_F}(1/t) chi_{M^F}(t)`` as a polynomial in ``t``."""
    top = len(lat) - 1
    total = IntPoly()
    for f in range(len(lat)):
        local = lat.char_poly_index(0, f).reverse(lat.ranks[f])
        total = total + local * lat.char_poly_index(f, top)
    return total


def cancellation_check(lat: FlatLattice) -> bool:
    if lat.rank == 0:
        raise RankZero("the cancellation identity needs positive rank")
    return cancellation_sum(lat).is_zero()


# closed forms for the first coefficients ---------------------------------


def _W(lat, lo, hi, i, j):
    return interval_whitney(lat, lo, hi, "second", i, j)


def _w(lat, lo, hi, i, j):
    return interval_whitney(lat, lo, hi, "first", i, j)


def _linear(lat, lo, hi):
    d = lat.ranks[hi] - lat.ranks[lo]
    return _W(lat, lo, hi, 0, d - 1) - _W(lat, lo, hi, 0, 1)


def _quadratic(lat, lo, hi):
    d = lat.ranks[hi] - lat.ranks[lo]
    return (
        _w(lat, lo, hi, 0, 2)
        - _W(lat, lo, hi, 1, d - 1)
        + _W(lat, lo, hi, 0, d - 2)
        - _W(lat, lo, hi, d - 3, d - 2)
        + _W(lat, lo, hi, d - 3, d - 1)
    )


def _cubic(lat, lo, hi):
    d = lat.ranks[hi] - lat.ranks[lo]
    r0 = lat.ranks[lo]
    total = (
        _w(lat, lo, hi, 0, 3)
        - _W(lat, lo, hi, d - 4, d - 3)
        + _W(lat, lo, hi, d - 4, d - 1)
        - _W(lat, lo, hi, 1, d - 2)
        + _W(lat, lo, hi, 0, d - 3)
    )
    for f in lat.interval_indices(lo, hi):
        rel = lat.ranks[f] - r0
        if rel == d - 1:
            total += _w(lat, lo, f, 0, 2)
        elif rel == d - 3:
            total -= _W(lat, lo, f, 0, 1) * (_W(lat, f, hi, 0, 2) - _W(lat, f, hi, 0, 1))
        elif rel == d - 5:
            total += (
                _w(lat, f, hi, 0, 2)
                - _W(lat, f, hi, 1, 4)
                + _W(lat, f, hi, 0, 3)
                + _W(lat, f, hi, 2, 4)
                - _W(lat, f, hi, 2, 3)
            )
    return total


def kl_coeff_closed(lat: FlatLattice, i: int) -> int:
    """Coefficient of ``t^i`` (``i <= 3``) from Whitney-number formulas, without the recursion."""
    lo, hi = 0, len(lat) - 1
    if i == 0:
        return 1
    if i == 1:
        return _linear(lat, lo, hi)
    if i == 2:
        return _quadratic(lat, lo, hi)
    if i == 3:
        return _cubic(lat, lo, hi)
    raise UnsupportedIndex(f"closed forms exist only for i <= 3, got {i}")


# conjecture checks -------------------------------------------------------


@dataclass
class ConjectureReport:
    coefficients: list[int]
    nonnegative: bool
    log_concave: bool
    no_internal_zeros: bool
    failures: list[str] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return self.nonnegative and self.log_concave and self.no_internal_zeros


def sequence_report(coeffs) -> ConjectureReport:
    cs = list(coeffs)
    failures = []
    nonneg = all(c >= 0 for c in cs)
    if not nonneg:
        failures.append("negative coefficient")
    lc = all(cs[k - 1] * cs[k + 1] <= cs[k] ** 2 for k in range(1, len(cs) - 1))
    if not lc:
        failures.append("not log concave")
    support = [k for k, c in enumerate(cs) if c]
    nz = not support or support == list(range(support[0], support[-1] + 1))
    if not nz:
        failures.append("internal zero")
    return ConjectureReport(cs, nonneg, lc, nz, failures)


def conjecture_report(lat_or_poly) -> ConjectureReport:
    if isinstance(lat_or_poly, FlatLattice):
        lat_or_poly = kl_poly(lat_or_poly).poly
    return sequence_report(lat_or_poly.coeffs)
