"""Power series in ``u`` with polynomial-in-``t`` coefficients, truncated at a fixed order."""

from __future__ import annotations

from math import comb
from typing import Iterable

from .polynomial import IntPoly


class Series2:
    """``sum_{k <= order} coeffs[k](t) u^k``; all higher powers of ``u`` are dropped."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[IntPoly | int], order: int):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = [c if isinstance(c, IntPoly) else IntPoly([c]) for c in coeffs]
        cs = cs[: order + 1]
        cs += [IntPoly()] * (order + 1 - len(cs))
        self.order = order
        self.coeffs: list[IntPoly] = cs

    @classmethod
    def zero(cls, order: int) -> Series2:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> Series2:
        return cls([1], order)

    @classmethod
    def u(cls, order: int) -> Series2:
        return cls([0, 1], order)

    def __getitem__(self, k: int) -> IntPoly:
        if 0 <= k <= self.order:
            return self.coeffs[k]
        return IntPoly()

    def _coerce(self, other) -> Series2:
        if isinstance(other, Series2):
            return other
        if isinstance(other, (int, IntPoly)):
            return Series2([other], self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        return Series2([self[k] + other[k] for k in range(order + 1)], order)

    __radd__ = __add__

    def __neg__(self):
        return Series2([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        out = [IntPoly()] * (order + 1)
        for i in range(order + 1):
            a = self[i]
            if a.is_zero():
                continue
            for j in range(order + 1 - i):
                b = other[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Series2(out, order)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Series2:
        if k < 0:
            return self.inverse() ** (-k)
        out = Series2.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Series2):
            return NotImplemented
        order = min(self.order, other.order)
        return all(self[k] == other[k] for k in range(order + 1))

    def truncate(self, order: int) -> Series2:
        return Series2(self.coeffs, min(order, self.order))

    def valuation(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        return None

    def inverse(self) -> Series2:
        """Inverse of a series with constant term ``1 + (t-multiple of u)``-free part equal to 1."""
        if self[0] != 1:
            raise ValueError("only series with constant term 1 are inverted")
        rest = Series2.one(self.order) - self
        out = Series2.one(self.order)
        power = Series2.one(self.order)
        for _ in range(self.order):
            power = power * rest
            out = out + power
        return out

    def shift(self, k: int) -> Series2:
        """Multiply by ``u^k``; negative ``k`` requires the low coefficients to vanish."""
        if k >= 0:
            return Series2([IntPoly()] * k + self.coeffs, self.order + k)
        if any(not self[j].is_zero() for j in range(-k)):
            raise ValueError("cannot divide by u: series has low-order terms")
        return Series2(self.coeffs[-k:], self.order + k)

    def divided_derivative(self, k: int) -> Series2:
        """``(d/du)^k / k!`` applied term-wise; exact over the integers."""
        if k == 0:
            return self
        out = [self[s] * comb(s, k) for s in range(k, self.order + 1)]
        return Series2(out, self.order - k)

    def compose(self, inner: Series2) -> Series2:
        """Substitute ``u -> inner`` where ``inner`` has no constant term."""
        if not inner[0].is_zero():
            raise ValueError("substituted series must have positive u-valuation")
        order = min(self.order, inner.order)
        out = Series2.zero(order)
        for k in range(order, -1, -1):  # Horner
            out = out * inner + self[k]
        return out

    def __repr__(self):
        terms = [f"({c})*u^{k}" for k, c in enumerate(self.coeffs) if not c.is_zero()]
        return f"Series2[{self.order}](" + " + ".join(terms) + ")"


def geometric(x: Series2, power: int) -> Series2:
    """``(1 - x)^(-power)`` for ``x`` of positive valuation, by the binomial series."""
    if not x[0].is_zero():
        raise ValueError("geometric expansion needs positive u-valuation")
    if power == 0:
        return Series2.one(x.order)
    out = Series2.zero(x.order)
    term = Series2.one(x.order)
    for ell in range(x.order + 1):
        out = out + term * comb(power - 1 + ell, ell)
        term = term * x
    return out
