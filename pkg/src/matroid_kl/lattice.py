"""Lattices of flats.

A flat is a Python ``int`` used as a bitset over the ground set ``0..size-1``.
``FlatLattice`` keeps the flats sorted by ``(rank, bitset value)``; most internal
routines work with positions in that order ("indices") rather than the bitsets,
and the public functions at the bottom of the module take bitsets.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from .combinatorics import bell, set_partitions
from .errors import (
    FlatNotInLattice,
    InvalidLattice,
    LoopsPresent,
    NotComparable,
    RankOutOfRange,
    SpecParseError,
    TooLarge,
)
from .polynomial import IntPoly

DEFAULT_FLAT_CAP = 10**6

Flat = int


def flat_cap() -> int:
    value = os.environ.get("KL_FLAT_CAP")
    if value:
        try:
            return int(value)
        except ValueError:
            raise SpecParseError(f"KL_FLAT_CAP must be an integer, got {value!r}") from None
    return DEFAULT_FLAT_CAP


def members(flat: Flat) -> list[int]:
    out, i = [], 0
    while flat:
        if flat & 1:
            out.append(i)
        flat >>= 1
        i += 1
    return out


def to_bits(elements: Iterable[int]) -> Flat:
    out = 0
    for e in elements:
        out |= 1 << e
    return out


# ---------------------------------------------------------------------------
# matroid encodings


@dataclass(frozen=True)
class Uniform:
    m: int
    d: int

    def __str__(self):
        return f"uniform:{self.m},{self.d}"


@dataclass(frozen=True)
class Boolean:
    n: int

    def __str__(self):
        return f"boolean:{self.n}"


@dataclass(frozen=True)
class Braid:
    n: int

    def __str__(self):
        return f"braid:{self.n}"


@dataclass(frozen=True)
class Graph:
    vertices: int
    edges: tuple[tuple[int, int], ...]

    def __str__(self):
        return f"graph({self.vertices} vertices, {len(self.edges)} edges)"


@dataclass(frozen=True)
class Matrix:
    p: int
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __str__(self):
        return f"matrix(GF({self.p}), {self.rows}x{self.cols})"


@dataclass(frozen=True)
class ExplicitFlats:
    flats: tuple[tuple[tuple[int, ...], int], ...]

    def __str__(self):
        return f"flats({len(self.flats)})"


MatroidSpec = Uniform | Boolean | Braid | Graph | Matrix | ExplicitFlats


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise SpecParseError(f"bad integer list in {what}: {text!r}") from None


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise SpecParseError(f"cannot read {path}: {exc}") from None


def parse_graph(text: str) -> Graph:
    edges = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        vals = _ints(line, "graph edge")
        if len(vals) != 2 or min(vals) < 0:
            raise SpecParseError(f"graph edge lines are 'u v' with 0-based vertices: {line!r}")
        edges.append((vals[0], vals[1]))
    vertices = 1 + max((max(e) for e in edges), default=-1)
    return Graph(vertices, tuple(edges))


def parse_matrix(text: str) -> Matrix:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise SpecParseError("empty matrix file")
    header = _ints(lines[0], "matrix header")
    if len(header) != 3:
        raise SpecParseError("matrix header must be 'p r c'")
    p, r, c = header
    if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
        raise SpecParseError(f"matrix modulus {p} is not prime")
    if len(lines) - 1 != r:
        raise SpecParseError(f"matrix declares {r} rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        vals = _ints(ln, "matrix row")
        if len(vals) != c:
            raise SpecParseError(f"matrix row has {len(vals)} entries, expected {c}")
        if any(not 0 <= v < p for v in vals):
            raise SpecParseError(f"matrix entries must lie in [0, {p}): {ln!r}")
        rows.append(tuple(vals))
    return Matrix(p, r, c, tuple(rows))


def parse_flats(text: str) -> ExplicitFlats:
    try:
        data = json.loads(text)
        flats = tuple((tuple(sorted(int(x) for x in d["members"])), int(d["rank"])) for d in data)
    except (ValueError, KeyError, TypeError) as exc:
        raise SpecParseError(f"flats file must be a JSON list of {{members, rank}}: {exc}") from None
    return ExplicitFlats(flats)


def parse_spec(text: str) -> MatroidSpec:
    """Parse the ``family:args`` mini-language used by the CLI and fixtures."""
    kind, sep, arg = text.strip().partition(":")
    if not sep:
        raise SpecParseError(f"matroid spec needs 'kind:args', got {text!r}")
    kind = kind.lower()
    if kind in ("uniform", "boolean", "braid"):
        vals = _ints(arg, kind)
        if any(v < 0 for v in vals):
            raise SpecParseError(f"negative parameter in {text!r}")
        if kind == "uniform" and len(vals) == 2:
            return Uniform(*vals)
        if kind == "boolean" and len(vals) == 1:
            return Boolean(vals[0])
        if kind == "braid" and len(vals) == 1:
            if vals[0] < 1:
                raise SpecParseError("braid:n needs n >= 1")
            return Braid(vals[0])
        raise SpecParseError(f"wrong number of parameters in {text!r}")
    if kind in ("graph", "matrix", "flats"):
        if not arg.startswith("@"):
            raise SpecParseError(f"{kind} specs take a file: {kind}:@FILE")
        body = _read(arg[1:])
        return {"graph": parse_graph, "matrix": parse_matrix, "flats": parse_flats}[kind](body)
    raise SpecParseError(f"unknown matroid kind {kind!r}")


# ---------------------------------------------------------------------------
# rank oracles


class GraphicMatroid:
    def __init__(self, vertices: int, edges: Sequence[tuple[int, int]]):
        self.vertices = vertices
        self.edges = list(edges)
        self.size = len(self.edges)

    def rank(self, mask: int) -> int:
        parent = list(range(self.vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        r = 0
        for e in members(mask):
            u, v = self.edges[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                r += 1
        return r


class LinearMatroid:
    """Column matroid of a matrix over GF(p)."""

    def __init__(self, p: int, entries: Sequence[Sequence[int]], cols: int):
        self.p = p
        self.size = cols
        self.columns = [[row[j] % p for row in entries] for j in range(cols)]

    def rank(self, mask: int) -> int:
        p = self.p
        pivots: list[tuple[int, list[int]]] = []
        for j in members(mask):
            v = list(self.columns[j])
            for lead, row in pivots:
                c = v[lead]
                if c:
                    v = [(a - c * b) % p for a, b in zip(v, row)]
            lead = next((i for i, a in enumerate(v) if a), None)
            if lead is None:
                continue
            inv = pow(v[lead], p - 2, p)
            v = [(a * inv) % p for a in v]
            pivots.append((lead, v))
        return len(pivots)


def _flats_from_rank(size: int, rank: Callable[[int], int], cap: int) -> list[tuple[int, int]]:
    for e in range(size):
        if rank(1 << e) == 0:
            raise LoopsPresent(f"element {e} is a loop")
    full = (1 << size) - 1
    cache: dict[int, int] = {}

    def rk(mask):
        r = cache.get(mask)
        if r is None:
            r = cache[mask] = rank(mask)
        return r

    def closure(mask):
        r = rk(mask)
        out = mask
        for e in range(size):
            bit = 1 << e
            if not mask & bit and rk(mask | bit) == r:
                out |= bit
        return out

    level = {0}
    found = [(0, 0)]
    r = 0
    while level:
        nxt = set()
        for f in level:
            rest = full & ~f
            while rest:
                bit = rest & -rest
                rest ^= bit
                g = closure(f | bit)
                if g not in nxt:
                    nxt.add(g)
                    # everything in g \ f gives the same cover
                rest &= ~g
        r += 1
        found.extend((g, r) for g in nxt)
        if len(found) > cap:
            raise TooLarge(f"more than {cap} flats")
        level = nxt
    return found


def braid_edges(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def braid_flat(n: int, blocks: Iterable[Iterable[int]]) -> Flat:
    """Edge bitset of the flat of the braid matroid given by a set partition of ``range(n)``."""
    index = {e: i for i, e in enumerate(braid_edges(n))}
    out = 0
    for block in blocks:
        for a, b in combinations(sorted(block), 2):
            out |= 1 << index[(a, b)]
    return out


def braid_blocks(n: int, flat: Flat) -> list[list[int]]:
    """Inverse of :func:`braid_flat`."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, (a, b) in enumerate(braid_edges(n)):
        if flat >> i & 1:
            parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def _check_cap(count: int, cap: int):
    if count > cap:
        raise TooLarge(f"{count} flats exceeds the cap of {cap}")


def build_lattice(spec: MatroidSpec | str, cap: int | None = None) -> FlatLattice:
    """Complete lattice of flats for any supported matroid encoding."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if cap is None:
        cap = flat_cap()
    if isinstance(spec, Boolean):
        n = spec.n
        _check_cap(2**n, cap)
        flats = [(f, bin(f).count("1")) for f in range(2**n)]
        return FlatLattice(n, flats, family=("boolean", n))
    if isinstance(spec, Uniform):
        m, d = spec.m, spec.d
        size = m + d
        if d == 0 and size:
            raise LoopsPresent("a rank-0 matroid on a nonempty set consists of loops")
        count = sum(comb(size, k) for k in range(d)) + 1
        _check_cap(count, cap)
        flats = [(to_bits(c), k) for k in range(d) for c in combinations(range(size), k)]
        flats.append(((1 << size) - 1, d))
        return FlatLattice(size, flats, family=("uniform", m, d))
    if isinstance(spec, Braid):
        n = spec.n
        if n < 1:
            raise SpecParseError("braid matroids need n >= 1")
        _check_cap(bell(n), cap)
        flats = [(braid_flat(n, blocks), n - len(blocks)) for blocks in set_partitions(n)]
        return FlatLattice(len(braid_edges(n)), flats, family=("braid", n))
    if isinstance(spec, Graph):
        for u, v in spec.edges:
            if u == v:
                raise LoopsPresent(f"self-loop at vertex {u}")
        m = GraphicMatroid(spec.vertices, spec.edges)
        return FlatLattice(m.size, _flats_from_rank(m.size, m.rank, cap))
    if isinstance(spec, Matrix):
        m = LinearMatroid(spec.p, spec.entries, spec.cols)
        return FlatLattice(m.size, _flats_from_rank(m.size, m.rank, cap))
    if isinstance(spec, ExplicitFlats):
        return from_explicit_flats(spec.flats, cap)
    raise TypeError(f"not a matroid spec: {spec!r}")


def from_explicit_flats(data: Iterable[tuple[Iterable[int], int]], cap: int | None = None) -> FlatLattice:
    """Build and validate a lattice from ``(members, rank)`` pairs."""
    if cap is None:
        cap = flat_cap()
    pairs = [(to_bits(ms), int(r)) for ms, r in data]
    _check_cap(len(pairs), cap)
    if not pairs:
        raise InvalidLattice("no flats given")
    seen: dict[int, int] = {}
    for f, r in pairs:
        if f in seen and seen[f] != r:
            raise InvalidLattice(f"flat {members(f)} listed with ranks {seen[f]} and {r}")
        seen[f] = r
    ground = 0
    for f in seen:
        ground |= f
    size = ground.bit_length()
    if ground != (1 << size) - 1:
        raise InvalidLattice("ground set elements must be 0..n-1 with every element in some flat")
    bottoms = [f for f, r in seen.items() if r == 0]
    if len(bottoms) != 1:
        raise InvalidLattice(f"expected exactly one rank-0 flat, found {len(bottoms)}")
    if bottoms[0]:
        raise LoopsPresent(f"elements {members(bottoms[0])} are loops")
    lat = FlatLattice(size, list(seen.items()))
    validate_geometric(lat)
    return lat


def validate_geometric(lat: FlatLattice) -> None:
    """Raise ``InvalidLattice`` unless ``lat`` is the lattice of flats of a loopless matroid."""
    flats, ranks = lat.flats, lat.ranks
    full = (1 << lat.size) - 1
    if flats[0] != 0 or ranks[0] != 0:
        raise InvalidLattice("bottom flat must be the empty set of rank 0")
    if flats[-1] != full or sum(1 for r in ranks if r == ranks[-1]) != 1:
        raise InvalidLattice("the whole ground set must be the unique flat of maximal rank")
    for a in flats:
        for b in flats:
            if (a & b) not in lat._index:
                raise InvalidLattice(f"{members(a)} & {members(b)} is not a flat")
    # graded: every flat of rank r >= 1 has a lower cover of rank r - 1 and nothing
    # strictly between; covers of each flat partition the complement
    for i in range(len(lat)):
        if ranks[i] and not lat.lower_covers[i]:
            raise InvalidLattice(f"flat {members(flats[i])} has no flat of rank {ranks[i] - 1} below it")
        for j in range(len(lat)):
            if i != j and flats[i] & flats[j] == flats[i] and ranks[j] <= ranks[i]:
                raise InvalidLattice("ranks are not strictly increasing along inclusions")
        if i == len(lat) - 1:
            continue
        covered = 0
        for j in lat.upper_covers[i]:
            extra = flats[j] & ~flats[i]
            if covered & extra:
                raise InvalidLattice(f"upper covers of {members(flats[i])} overlap outside it")
            covered |= extra
        if covered != full & ~flats[i]:
            raise InvalidLattice(f"upper covers of {members(flats[i])} miss some elements")
    atoms = 0
    for j in lat.level(1):
        atoms |= flats[j]
    if atoms != full:
        raise InvalidLattice("lattice is not atomistic")
    for i in range(len(lat)):
        for j in range(i + 1, len(lat)):
            k, m = lat.join_index(i, j), lat.meet_index(i, j)
            if ranks[i] + ranks[j] < ranks[k] + ranks[m]:
                raise InvalidLattice("lattice is not semimodular")


# ---------------------------------------------------------------------------
# the lattice


def _to_words(flats: Sequence[int], size: int) -> np.ndarray:
    words = max(1, (size + 63) // 64)
    arr = np.zeros((len(flats), words), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, f in enumerate(flats):
        for w in range(words):
            arr[i, w] = (f >> (64 * w)) & mask
    return arr


class FlatLattice:
    """Immutable lattice of flats with lazily computed covers and Möbius rows."""

    def __init__(self, size: int, flats: Iterable[tuple[int, int]], family: tuple | None = None):
        pairs = sorted(set(flats), key=lambda fr: (fr[1], fr[0]))
        self.size = size
        self.flats: tuple[int, ...] = tuple(f for f, _ in pairs)
        self.ranks: tuple[int, ...] = tuple(r for _, r in pairs)
        self.family = family
        self._index = {f: i for i, f in enumerate(self.flats)}
        if len(self._index) != len(self.flats):
            raise InvalidLattice("a flat appears with two different ranks")
        starts = [0] * (self.ranks[-1] + 2)
        for r in self.ranks:
            starts[r + 1] += 1
        for r in range(1, len(starts)):
            starts[r] += starts[r - 1]
        self._starts = starts
        self._mobius: dict[int, dict[int, int]] = {}
        self._lock = threading.Lock()
        self._join_cache: dict[tuple[int, int], int] = {}

    # basic structure -----------------------------------------------------

    def __len__(self):
        return len(self.flats)

    def __repr__(self):
        return f"FlatLattice(size={self.size}, rank={self.rank}, flats={len(self)})"

    @property
    def rank(self) -> int:
        return self.ranks[-1]

    @property
    def bottom(self) -> Flat:
        return self.flats[0]

    @property
    def top(self) -> Flat:
        return self.flats[-1]

    def level(self, r: int) -> range:
        """Indices of the flats of rank ``r``."""
        if not 0 <= r <= self.rank:
            return range(0)
        return range(self._starts[r], self._starts[r + 1])

    def index_of(self, flat: Flat) -> int:
        try:
            return self._index[flat]
        except KeyError:
            raise FlatNotInLattice(f"{members(flat)} is not a flat of this lattice") from None

    def __contains__(self, flat) -> bool:
        return flat in self._index

    def rank_of(self, flat: Flat) -> int:
        return self.ranks[self.index_of(flat)]

    def corank(self, flat: Flat) -> int:
        return self.rank - self.rank_of(flat)

    def closure(self, elements: Iterable[int] | int) -> Flat:
        """Smallest flat containing the given elements (bitset or iterable)."""
        target = elements if isinstance(elements, int) else to_bits(elements)
        if target & ~((1 << self.size) - 1):
            raise FlatNotInLattice(f"elements {members(target)} are outside the ground set")
        return self.flats[self._closure_index(0, target)]

    def _closure_index(self, start: int, target: int) -> int:
        cur = start
        flats = self.flats
        while flats[cur] & target != target:
            missing = target & ~flats[cur]
            bit = missing & -missing
            for j in self.upper_covers[cur]:
                if flats[j] & bit:
                    cur = j
                    break
            else:  # pragma: no cover - impossible in a geometric lattice
                raise InvalidLattice("closure walk got stuck")
        return cur

    def join_index(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        key = (i, j)
        k = self._join_cache.get(key)
        if k is None:
            k = self._closure_index(j, self.flats[i] | self.flats[j])
            self._join_cache[key] = k
        return k

    def meet_index(self, i: int, j: int) -> int:
        return self._index[self.flats[i] & self.flats[j]]

    def leq_index(self, i: int, j: int) -> bool:
        return self.flats[i] & self.flats[j] == self.flats[i]

    # covers ----------------------------------------------------------------

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        """For each index, the indices of flats one rank lower contained in it."""
        n = len(self.flats)
        out: list[tuple[int, ...]] = [()] * n
        words = _to_words(self.flats, self.size)
        for r in range(1, self.rank + 1):
            lo, hi = self.level(r - 1), self.level(r)
            a = words[lo.start:lo.stop]
            chunk = max(1, (1 << 22) // max(1, len(lo) * words.shape[1]))
            for s in range(hi.start, hi.stop, chunk):
                b = words[s:min(s + chunk, hi.stop)]
                sub = ((a[None, :, :] & ~b[:, None, :]) == 0).all(axis=2)
                for k, row in enumerate(sub):
                    out[s + k] = tuple(int(x) + lo.start for x in np.flatnonzero(row))
        return tuple(out)

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        ups: list[list[int]] = [[] for _ in self.flats]
        for j, lows in enumerate(self.lower_covers):
            for i in lows:
                ups[i].append(j)
        return tuple(tuple(u) for u in ups)

    def up_indices(self, i: int) -> list[int]:
        """Sorted indices of all flats containing flat ``i`` (including itself)."""
        row = self._mobius.get(i)
        if row is not None:
            return list(row)
        seen = {i}
        stack = [i]
        ucs = self.upper_covers
        while stack:
            x = stack.pop()
            for y in ucs[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return sorted(seen)

    def down_indices(self, j: int) -> list[int]:
        seen = {j}
        stack = [j]
        lcs = self.lower_covers
        while stack:
            x = stack.pop()
            for y in lcs[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return sorted(seen)

    # Möbius function -------------------------------------------------------

    def mobius_row(self, i: int) -> dict[int, int]:
        """``{j: mu(flat_i, flat_j)}`` for every ``j`` above ``i``, keys in increasing order.

        Uses Weisner's theorem: for ``e`` in ``F - E``, ``mu(E, F)`` is minus the
        sum of ``mu(E, X)`` over lower covers ``X`` of ``F`` that contain ``E`` but not ``e``.
        """
        row = self._mobius.get(i)
        if row is not None:
            return row
        flats, lcs = self.flats, self.lower_covers
        e_bits = flats[i]
        row = {i: 1}
        for f in self.up_indices(i):
            if f == i:
                continue
            rest = flats[f] & ~e_bits
            low = rest & -rest
            s = 0
            for x in lcs[f]:
                if not flats[x] & low:
                    v = row.get(x)
                    if v is not None:
                        s += v
            row[f] = -s
        with self._lock:
            return self._mobius.setdefault(i, row)

    def mobius_index(self, i: int, j: int) -> int:
        if not self.leq_index(i, j):
            raise NotComparable(f"{members(self.flats[i])} is not below {members(self.flats[j])}")
        return self.mobius_row(i)[j]

    def interval_indices(self, lo: int, hi: int) -> list[int]:
        if not self.leq_index(lo, hi):
            raise NotComparable(f"{members(self.flats[lo])} is not below {members(self.flats[hi])}")
        top = self.flats[hi]
        flats = self.flats
        return [j for j in self.up_indices(lo) if flats[j] & top == flats[j]]

    def char_poly_index(self, lo: int, hi: int) -> IntPoly:
        """Characteristic polynomial of the interval ``[lo, hi]``."""
        r = self.ranks[hi] - self.ranks[lo]
        row = self.mobius_row(lo)
        coeffs = [0] * (r + 1)
        top = self.flats[hi]
        for j, mu in row.items():
            if self.flats[j] & top == self.flats[j]:
                coeffs[r - (self.ranks[j] - self.ranks[lo])] += mu
        return IntPoly(coeffs)

    def interval(self, lo: int, hi: int, family: tuple | None = None) -> FlatLattice:
        """The interval ``[lo, hi]`` relabelled as a standalone lattice."""
        idx = self.interval_indices(lo, hi)
        base, top = self.flats[lo], self.flats[hi]
        positions = members(top & ~base)
        remap = {p: k for k, p in enumerate(positions)}
        r0 = self.ranks[lo]
        out = []
        for j in idx:
            bits = 0
            for p in members(self.flats[j] & ~base):
                bits |= 1 << remap[p]
            out.append((bits, self.ranks[j] - r0))
        return FlatLattice(len(positions), out, family=family)


# ---------------------------------------------------------------------------
# public operations on bitset flats


def mobius(lat: FlatLattice, E: Flat, F: Flat) -> int:
    return lat.mobius_index(lat.index_of(E), lat.index_of(F))


def char_poly(lat: FlatLattice) -> IntPoly:
    """``sum(mu(0, F) t^(rk M - rk F))``."""
    return lat.char_poly_index(0, len(lat) - 1)


def localization(lat: FlatLattice, F: Flat) -> FlatLattice:
    """Lattice of the localization at ``F``: the interval ``[bottom, F]``."""
    return lat.interval(0, lat.index_of(F))


def restriction(lat: FlatLattice, F: Flat) -> FlatLattice:
    """Lattice of the restriction at ``F``: the interval ``[F, top]``."""
    return lat.interval(lat.index_of(F), len(lat) - 1)


def direct_sum(a: FlatLattice, b: FlatLattice, cap: int | None = None) -> FlatLattice:
    if cap is None:
        cap = flat_cap()
    _check_cap(len(a) * len(b), cap)
    shift = a.size
    flats = [(fa | (fb << shift), ra + rb) for fa, ra in zip(a.flats, a.ranks) for fb, rb in zip(b.flats, b.ranks)]
    return FlatLattice(a.size + b.size, flats)


def whitney(lat: FlatLattice, kind: str, i: int, j: int) -> int:
    """Doubly indexed Whitney number ``w_{i,j}`` (``first``) or ``W_{i,j}`` (``second``)."""
    if not (0 <= i <= lat.rank and 0 <= j <= lat.rank):
        raise RankOutOfRange(f"whitney indices ({i}, {j}) outside 0..{lat.rank}")
    return interval_whitney(lat, 0, len(lat) - 1, kind, i, j)


def interval_whitney(lat: FlatLattice, lo: int, hi: int, kind: str, i: int, j: int) -> int:
    """Whitney number of the interval ``[lo, hi]`` seen as a standalone lattice.

    Out-of-range ranks give 0, which is the convention the closed coefficient
    formulas need.
    """
    if kind not in ("first", "second"):
        raise ValueError(f"unknown Whitney kind {kind!r}")
    r0 = lat.ranks[lo]
    d = lat.ranks[hi] - r0
    if not (0 <= i <= d and 0 <= j <= d) or i > j:
        return 0
    top = lat.flats[hi]
    flats, ranks = lat.flats, lat.ranks
    total = 0
    for e in lat.level(r0 + i):
        if flats[e] & flats[lo] != flats[lo] or flats[e] & top != flats[e]:
            continue
        row = lat.mobius_row(e)
        for f, mu in row.items():
            if ranks[f] == r0 + j and flats[f] & top == flats[f]:
                total += mu if kind == "first" else 1
    return total


def is_modular(lat: FlatLattice) -> bool:
    ranks = lat.ranks
    n = len(lat)
    for i in range(n):
        for j in range(i + 1, n):
            if ranks[i] + ranks[j] != ranks[lat.join_index(i, j)] + ranks[lat.meet_index(i, j)]:
                return False
    return True
