"""Fast KL polynomials for uniform and braid matroids.

Neither routine builds a lattice.  Uniform matroids use a coefficient recursion
indexed by ``(m, d)``; braid matroids group the flats of the partition lattice by
block type, so the work is over integer partitions of ``n`` instead of the
Bell(n) set partitions.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from math import comb

from .combinatorics import S2, Partition, m_count, multinomial, partitions, s1
from .errors import IndexOutOfRange, UnsupportedIndex
from .kl import solve_from_remainder
from .polynomial import ONE, IntPoly
from .series import Series2, geometric

_lock = threading.Lock()


# uniform matroids ----------------------------------------------------------


@lru_cache(maxsize=None)
def _uniform_coeffs(m: int, d: int) -> tuple[int, ...]:
    if d == 0:
        return (1,)
    top = m + d
    out = []
    for i in range((d + 1) // 2):
        c = (-1) ** i * comb(top, i)
        for j in range(i):
            for k in range(2 * j + 1, i + j + 1):
                prev = _uniform_coeffs(m, k)
                if j < len(prev) and prev[j]:
                    sign = -1 if (i + j + k) % 2 else 1
                    c += sign * multinomial(top, (m + k, i + j - k, d - i - j)) * prev[j]
        out.append(c)
    return tuple(out)


def uniform_kl(m: int, d: int) -> IntPoly:
    """KL polynomial of the uniform matroid of rank ``d`` on ``m + d`` elements."""
    if m < 0 or d < 0:
        raise ValueError("uniform_kl needs m, d >= 0")
    # fill smaller ranks first so the recursion depth stays bounded
    for k in range(d):
        _uniform_coeffs(m, k)
    return IntPoly(_uniform_coeffs(m, d))


def uniform_char_poly(m: int, d: int) -> IntPoly:
    """Characteristic polynomial of the uniform matroid, from its Boolean lower part."""
    n = m + d
    coeffs = [0] * (d + 1)
    for k in range(d):
        coeffs[d - k] = (-1) ** k * comb(n, k)
    coeffs[0] = -sum(coeffs[1:])
    return IntPoly(coeffs)


def uniform_coeff_closed(m: int, d: int, i: int) -> int:
    """Coefficient ``i <= 3`` of ``uniform_kl(m, d)`` from signed multinomial sums.

    The sums are only meaningful below the degree bound, so ``0`` is returned
    when ``2 i >= d``.
    """
    if i > 3 or i < 0:
        raise UnsupportedIndex(f"closed forms exist only for 0 <= i <= 3, got {i}")
    if i == 0:
        return 1
    if 2 * i >= d:
        return 0
    n = m + d

    def mc(*lower):
        return multinomial(n, lower)

    if i == 1:
        return mc(m + 1, d - 1) - mc(1, n - 1)
    if i == 2:
        return (
            mc(m + 1, d - 3, 2)
            - mc(m + 1, d - 2, 1)
            + mc(m + 2, d - 2, 0)
            - mc(m + 2, d - 3, 1)
            + mc(2, n - 2)
        )
    return (
        mc(m + 1, d - 3, 2, 0)
        - mc(m + 1, d - 4, 2, 1)
        + mc(m + 1, d - 4, 3, 0)
        - mc(m + 1, d - 5, 3, 1)
        + mc(m + 1, d - 5, 2, 2)
        - mc(m + 2, d - 3, 1, 0)
        + mc(m + 2, d - 4, 1, 1)
        - mc(m + 2, d - 5, 2, 1)
        + mc(m + 2, d - 5, 3, 0)
        + mc(m + 3, d - 3, 0, 0)
        - mc(m + 3, d - 4, 1, 0)
        + mc(m + 3, d - 5, 2, 0)
        - mc(3, n - 3)
    )


# braid matroids -------------------------------------------------------------


def localization_char_poly(lam) -> IntPoly:
    """Characteristic polynomial of a braid flat of type ``lam``: ``prod_j (t - j)^(lam^t_{j+1})``."""
    lam = Partition(lam)
    tr = lam.transpose()
    out = ONE
    for j in range(1, len(tr)):
        out = out * IntPoly([-j, 1]) ** tr[j]
    return out


_braid_cache: dict[int, IntPoly] = {1: ONE}


def braid_kl(n: int) -> IntPoly:
    """KL polynomial of the braid matroid of rank ``n - 1``, memoized on ``n``."""
    if n < 1:
        raise ValueError("braid_kl needs n >= 1")
    p = _braid_cache.get(n)
    if p is not None:
        return p
    for k in range(2, n + 1):
        if k in _braid_cache:
            continue
        remainder = IntPoly()
        for lam in partitions(k):
            if len(lam) == k:
                continue  # the bottom flat carries the unknown P_k
            term = localization_char_poly(lam) * _braid_cache[len(lam)]
            remainder = remainder + term * m_count(lam)
        p = solve_from_remainder(remainder, k - 1)
        with _lock:
            _braid_cache.setdefault(k, p)
    return _braid_cache[n]


def braid_char_poly(n: int) -> IntPoly:
    return IntPoly.from_roots(range(1, n))


def braid_whitney(n: int, i: int, j: int) -> int:
    """``W_{i,j}`` of the partition lattice of ``[n]``."""
    if not 0 <= i <= j <= n - 1:
        raise IndexOutOfRange(f"braid_whitney needs 0 <= i <= j <= n-1, got ({n}, {i}, {j})")
    return S2(n, n - i) * S2(n - i, n - j)


def braid_cubic(n: int, alternate: bool = False) -> int:
    """Coefficient of ``t^3`` in ``braid_kl(n)`` from Stirling numbers and block types.

    The ``w_{0,2}`` bracket is summed over two-block types (the flats of corank
    one) and the binomial sum over four-block types is subtracted, which is what
    the general cubic formula specialises to.  ``alternate=True`` sums the
    bracket over four-block types and adds the binomial sum instead; that
    reading disagrees with the recursion (n = 8 gives 27398 instead of 735) and
    is kept only for comparison.
    """
    if n < 1:
        raise ValueError("braid_cubic needs n >= 1")
    first_len = 4 if alternate else 2
    sign = 1 if alternate else -1
    total = s1(n, n - 3)
    for lam in partitions(n):
        if len(lam) == first_len:
            a, b = lam[0], lam[1]
            total += m_count(lam) * (
                S2(a, a - 1) * S2(a - 1, a - 2)
                + S2(b, b - 1) * S2(a, a - 1)
                + S2(b, b - 1) * S2(b - 1, b - 2)
                - S2(a, a - 2)
                - S2(b, b - 2)
            )
    total += -S2(n, n - 1) * S2(n - 1, 3) + S2(n, 4)
    for lam in partitions(n):
        if len(lam) == 4:
            total += sign * m_count(lam) * sum(comb(p, 2) for p in lam)
    total += 5 * S2(n, 5) + 15 * S2(n, 6)
    return total


def braid_linear(n: int) -> int:
    return S2(n, 2) - S2(n, n - 1)


def braid_quadratic(n: int) -> int:
    return s1(n, n - 2) - S2(n, n - 1) * S2(n - 1, 2) + S2(n, 3) + S2(n, 4)


# generating-function checks --------------------------------------------------


def uniform_series(m: int, order: int) -> Series2:
    """``sum_{d >= 1} P_{m,d}(t) u^d`` truncated at ``u^order``."""
    return Series2([IntPoly()] + [uniform_kl(m, d) for d in range(1, order + 1)], order)


def braid_series(order: int) -> Series2:
    """``sum_{n >= 1} P_n(t) u^(n-1)`` truncated at ``u^order``."""
    return Series2([braid_kl(n) for n in range(1, order + 2)], order)


def gf_check_uniform(m: int, order: int = 6) -> bool:
    if order < 1:
        raise ValueError("order must be >= 1")
    # left side: coefficient of u^d is t^d P_{m,d}(1/t)
    lhs = Series2([IntPoly()] + [uniform_kl(m, d).reverse(d) for d in range(1, order + 1)], order)
    u = Series2.u(order)
    x = u * IntPoly([-1, 1])  # tu - u, so 1 - tu + u = 1 - x
    inv = geometric(x, 1)
    # (1 + u)^(-m) is the geometric series in -u
    first = x * inv * geometric(-u, m)
    second = geometric(x, m + 1) * uniform_series(m, order).compose(u * inv)
    return lhs == first + second


def gf_check_braid(order: int = 6) -> bool:
    if order < 1:
        raise ValueError("order must be >= 1")
    psi = braid_series(order + 1)
    lhs = Series2([braid_kl(n).reverse(n - 1) for n in range(1, order + 2)], order)
    rhs = Series2.zero(order)
    # only nu with |nu| + l(nu) <= order + 1 survive the truncation
    for size in range(order + 1):
        for nu in partitions(size):
            tilde = nu.tilde()
            big = tilde.size
            if big > order + 1:
                continue
            weight = ONE
            for j, c in enumerate(nu.transpose(), start=1):
                weight = weight * IntPoly([-j, 1]) ** c
            inner = psi.truncate(order - size).shift(size + 1)
            term = inner.divided_derivative(big).shift(big - 1).truncate(order)
            rhs = rhs + term * (weight * m_count(tilde))
    return lhs == rhs
