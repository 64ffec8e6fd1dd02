"""Dense univariate polynomials with exact integer coefficients.

``IntPoly`` is an ordinary polynomial in ``t``; ``LaurentPoly`` allows negative
exponents in ``q``.  Both are immutable, hashable and stored in canonical form
(no zero coefficients at the ends), so equality is structural.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def _mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


class IntPoly:
    """Polynomial ``sum(coeffs[i] * t**i)``; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs: tuple[int, ...] = _trim([int(c) for c in coeffs])
        self._hash = None

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPoly:
        if degree < 0:
            raise ValueError("negative degree in IntPoly.monomial")
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPoly:
        """``prod(t - r for r in roots)``."""
        out = [1]
        for r in roots:
            out = _mul(out, [-r, 1])
        return cls(out)

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return IntPoly(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of IntPoly")
        result, base = IntPoly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        if isinstance(other, (list, tuple)):
            return self.coeffs == _trim(list(other))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("IntPoly", self.coeffs))
        return self._hash

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> IntPoly:
        """Multiply by ``t**k`` (``k >= 0``)."""
        if k < 0:
            raise ValueError("IntPoly.shift needs k >= 0")
        if not self.coeffs:
            return self
        return IntPoly([0] * k + list(self.coeffs))

    def reverse(self, n: int) -> IntPoly:
        """``t**n * p(1/t)``; requires ``deg p <= n``."""
        if self.degree > n:
            raise ValueError(f"cannot reverse degree {self.degree} polynomial in degree {n}")
        padded = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return IntPoly(reversed(padded))

    def truncate(self, n: int) -> IntPoly:
        """Keep the terms of degree ``< n``."""
        return IntPoly(self.coeffs[:max(n, 0)])

    def compose_neg_square(self) -> LaurentPoly:
        """Substitute ``t = q**-2``, giving a Laurent polynomial in ``q``."""
        return LaurentPoly.from_dict({-2 * i: c for i, c in enumerate(self.coeffs)})

    def to_laurent(self) -> LaurentPoly:
        return LaurentPoly(self.coeffs, 0)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return _format_terms(enumerate(self.coeffs), "t")


class LaurentPoly:
    """Laurent polynomial ``sum(coeffs[i] * q**(low + i))``."""

    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = (), low: int = 0):
        cs = [int(c) for c in coeffs]
        start = 0
        while start < len(cs) and not cs[start]:
            start += 1
        cs = _trim(cs[start:])
        self.coeffs: tuple[int, ...] = cs
        self.low: int = low + start if cs else 0
        self._hash = None

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> LaurentPoly:
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        out = [0] * (hi - lo + 1)
        for e, c in terms.items():
            out[e - lo] += c
        return cls(out, lo)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls([coeff], exponent)

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> dict[int, int]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def __getitem__(self, e: int) -> int:
        i = e - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly([other])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - lo + i] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.low)

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly([other])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly([c * other for c in self.coeffs], self.low)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly(_mul(self.coeffs, other.coeffs), self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of LaurentPoly")
        result = LaurentPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q**k``."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.coeffs, self.low + k)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.low == other.low and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == LaurentPoly([other])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("LaurentPoly", self.low, self.coeffs))
        return self._hash

    def __call__(self, x):
        # exact for Fraction / int inputs; negative exponents divide
        total = 0
        for e, c in self.terms().items():
            total += c * x**e
        return total

    def is_polynomial(self) -> bool:
        return not self.coeffs or self.low >= 0

    def has_negative_coefficient(self) -> bool:
        return any(c < 0 for c in self.coeffs)

    def to_intpoly(self) -> IntPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} has negative exponents")
        return IntPoly([0] * self.low + list(self.coeffs))

    def __repr__(self):
        return f"LaurentPoly({list(self.coeffs)}, low={self.low})"

    def __str__(self):
        return _format_terms(((self.low + i, c) for i, c in enumerate(self.coeffs)), "q")


def _format_terms(terms, var: str) -> str:
    parts = []
    for e, c in terms:
        if not c:
            continue
        if e == 0:
            mono = ""
        elif e == 1:
            mono = var
        else:
            mono = f"{var}^{e}"
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


ONE = IntPoly([1])
T = IntPoly([0, 1])
Q = LaurentPoly([1], 1)
