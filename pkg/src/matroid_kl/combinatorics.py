"""Integer partitions, set partitions, Stirling numbers and multinomials."""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Sequence

from .errors import IndexOutOfRange


class Partition(tuple):
    """An integer partition, stored as a weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def transpose(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def tilde(self) -> Partition:
        """Add one to every part."""
        return Partition(p + 1 for p in self)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def __repr__(self):
        return f"Partition({list(self)})"


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, largest first."""
    if n < 0:
        return
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return

    def rec(remaining, cap, prefix):
        if remaining == 0:
            yield Partition(prefix)
            return
        for first in range(min(remaining, cap), 0, -1):
            prefix.append(first)
            yield from rec(remaining - first, first, prefix)
            prefix.pop()

    yield from rec(n, max_part, [])


def set_partitions(n: int) -> Iterator[list[list[int]]]:
    """Set partitions of ``range(n)`` via restricted growth strings."""
    if n == 0:
        yield []
        return
    a = [0] * n

    def rec(i, m):
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(m + 1)]
            for x, b in enumerate(a):
                blocks[b].append(x)
            yield blocks
            return
        for b in range(m + 2):
            a[i] = b
            yield from rec(i + 1, max(m, b))

    a[0] = 0
    yield from rec(1, 0)


def multinomial(top: int, lower: Sequence[int]) -> int:
    """``top! / prod(k!)``, or 0 when any lower index is negative or they do not sum to ``top``."""
    if any(k < 0 for k in lower) or sum(lower) != top:
        return 0
    out, rest = 1, top
    for k in lower:
        out *= comb(rest, k)
        rest -= k
    return out


def m_count(lam: Sequence[int]) -> int:
    """Number of set partitions of ``[n]`` whose block sizes are ``lam``."""
    lam = Partition(lam)
    denom = 1
    for p in lam:
        denom *= factorial(p)
    for mult in lam.multiplicities().values():
        denom *= factorial(mult)
    return factorial(lam.size) // denom


@lru_cache(maxsize=None)
def _stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * _stirling2(n - 1, k) + _stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def _stirling1(n: int, k: int) -> int:
    # signed: s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k)
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return _stirling1(n - 1, k - 1) - (n - 1) * _stirling1(n - 1, k)


def _fill(fn, n):
    # warm the cache bottom-up so deep tables never hit the recursion limit
    for a in range(n + 1):
        for b in range(a + 1):
            fn(a, b)


def stirling(kind: str, n: int, k: int) -> int:
    """Signed Stirling numbers of the first kind, or Stirling numbers of the second kind."""
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"stirling needs 0 <= k <= n, got n={n}, k={k}")
    if kind in ("first", 1, "1"):
        fn = _stirling1
    elif kind in ("second", 2, "2"):
        fn = _stirling2
    else:
        raise ValueError(f"unknown Stirling kind {kind!r}")
    if n > 200:
        _fill(fn, n)
    return fn(n, k)


def S2(n: int, k: int) -> int:
    """Second-kind Stirling number, 0 outside ``0 <= k <= n``."""
    if not 0 <= k <= n:
        return 0
    return stirling("second", n, k)


def s1(n: int, k: int) -> int:
    """Signed first-kind Stirling number, 0 outside ``0 <= k <= n``."""
    if not 0 <= k <= n:
        return 0
    return stirling("first", n, k)


def bell(n: int) -> int:
    return sum(S2(n, k) for k in range(n + 1))


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out
