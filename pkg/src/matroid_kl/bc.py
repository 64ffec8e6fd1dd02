"""h-polynomial of the broken circuit complex and its comparison with the KL polynomial."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NegativeHCoefficient
from .kl import kl_poly
from .lattice import FlatLattice, char_poly
from .polynomial import IntPoly


@dataclass(frozen=True)
class FVector:
    """``counts[i]`` is the number of faces with ``i`` vertices; ``counts[0] = 1``."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if not self.counts or self.counts[0] != 1:
            raise ValueError("an f-vector starts with the empty face")

    @property
    def dimension(self) -> int:
        return len(self.counts) - 2

    def __getitem__(self, i):
        return self.counts[i]

    def __len__(self):
        return len(self.counts)


def bc_f_vector(lat: FlatLattice) -> FVector:
    # Whitney: the unsigned coefficients of chi count broken-circuit-free sets by size
    chi = char_poly(lat)
    d = lat.rank
    return FVector(tuple(abs(chi[d - i]) for i in range(d + 1)))


def h_from_f(f: FVector, d: int) -> IntPoly:
    """``sum_i f_{i-1} t^i (1 - t)^(d - i)``."""
    one_minus_t = IntPoly([1, -1])
    out = IntPoly()
    for i, c in enumerate(f.counts):
        out = out + (one_minus_t ** (d - i)).shift(i) * c
    return out


def bc_h_poly(lat: FlatLattice) -> IntPoly:
    h = h_from_f(bc_f_vector(lat), lat.rank)
    if any(c < 0 for c in h.coeffs):
        raise NegativeHCoefficient(f"h-polynomial {h} has a negative coefficient")
    return h


@dataclass
class DominanceReport:
    h: IntPoly
    kl: IntPoly
    same_degree: bool
    dominates: bool
    shortfalls: list[tuple[int, int, int]] = field(default_factory=list)  # (i, h_i, P_i)

    @property
    def holds(self) -> bool:
        return self.same_degree and self.dominates

    def summary(self) -> str:
        lines = [
            f"h = {self.h}",
            f"P = {self.kl}",
            f"degree: {self.h.degree} vs {self.kl.degree} ({'equal' if self.same_degree else 'differ'})",
        ]
        if self.dominates:
            lines.append("h >= P coefficient-wise")
        else:
            i, a, b = self.shortfalls[0]
            lines.append(f"h < P at t^{i}: {a} < {b}")
        return "\n".join(lines)


def dominance_report(lat: FlatLattice) -> DominanceReport:
    h = bc_h_poly(lat)
    p = kl_poly(lat).poly
    short = [(i, h[i], p[i]) for i in range(p.degree + 1) if h[i] < p[i]]
    return DominanceReport(h, p, h.degree == p.degree, not short, short)
