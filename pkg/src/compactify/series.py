"""Truncated power series with exact coefficients.

Coefficients live in a commutative ring that supports ``+``, ``-``, ``*``
and (for division) a multiplicative ``inverse``.  Two rings are used here:
:class:`fractions.Fraction` and :class:`VarJet`, the quotient ring
Q[w]/(w^3) used to carry a marker variable v = 1 + w through generating
functions so that first and second factorial moments fall out of the
w-expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

#: Default truncation order for the generating-function helpers.
DEFAULT_ORDER = 64

#: Hard cap guarding the cubic-cost composition routines.
ORDER_BOUND = 512


@dataclass(frozen=True)
class VarJet:
    """Element a + b*w + c*w^2 of Q[w]/(w^3), with w = v - 1.

    Tracking a counting variable v as a jet around v = 1 keeps exactly the
    information needed for means and variances: substituting a power v^m
    gives a = 1, b = m, c = m(m-1)/2.
    """

    a: Fraction
    b: Fraction
    c: Fraction

    @staticmethod
    def const(x) -> "VarJet":
        return VarJet(Fraction(x), Fraction(0), Fraction(0))

    @staticmethod
    def v_power(m: int, scale=1) -> "VarJet":
        """scale * v^m expanded around v = 1."""
        s = Fraction(scale)
        return VarJet(s, s * m, s * (m * (m - 1) // 2))

    def __add__(self, other: "VarJet") -> "VarJet":
        return VarJet(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: "VarJet") -> "VarJet":
        return VarJet(self.a - other.a, self.b - other.b, self.c - other.c)

    def __neg__(self) -> "VarJet":
        return VarJet(-self.a, -self.b, -self.c)

    def __mul__(self, other: "VarJet") -> "VarJet":
        return VarJet(
            self.a * other.a,
            self.a * other.b + self.b * other.a,
            self.a * other.c + self.b * other.b + self.c * other.a,
        )

    def __bool__(self) -> bool:
        return bool(self.a or self.b or self.c)

    def inverse(self) -> "VarJet":
        if not self.a:
            raise ZeroDivisionError("constant term is not invertible")
        ia = 1 / self.a
        b = -self.b * ia * ia
        c = (self.b * self.b * ia - self.c) * ia * ia
        return VarJet(ia, b, c)


JET_ZERO = VarJet.const(0)
JET_ONE = VarJet.const(1)


def _inverse(x):
    return x.inverse() if isinstance(x, VarJet) else Fraction(1) / x


class Series:
    """Power series truncated after z**order, with exact ring coefficients."""

    __slots__ = ("coeffs", "order", "zero")

    def __init__(self, coeffs: Sequence, order: int, zero=Fraction(0)):
        if order < 0 or order > ORDER_BOUND:
            raise ValueError(f"series order {order} outside [0, {ORDER_BOUND}]")
        padded = list(coeffs[: order + 1])
        padded.extend([zero] * (order + 1 - len(padded)))
        self.coeffs = padded
        self.order = order
        self.zero = zero

    @staticmethod
    def from_terms(terms: dict[int, object], order: int, zero=Fraction(0)) -> "Series":
        coeffs = [zero] * (order + 1)
        for exp, c in terms.items():
            if exp <= order:
                coeffs[exp] = c
        return Series(coeffs, order, zero)

    @staticmethod
    def build(fn: Callable[[int], object], order: int, zero=Fraction(0)) -> "Series":
        return Series([fn(k) for k in range(order + 1)], order, zero)

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k <= self.order else self.zero

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Series)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        head = ", ".join(repr(c) for c in self.coeffs[:6])
        return f"Series([{head}, ...], order={self.order})"

    def _like(self, coeffs) -> "Series":
        return Series(coeffs, self.order, self.zero)

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        return self._like([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Series") -> "Series":
        self._check(other)
        return self._like([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "Series":
        return self._like([-a for a in self.coeffs])

    def scale(self, factor) -> "Series":
        return self._like([c * factor for c in self.coeffs])

    def add_const(self, value) -> "Series":
        coeffs = list(self.coeffs)
        coeffs[0] = coeffs[0] + value
        return self._like(coeffs)

    def __mul__(self, other: "Series") -> "Series":
        self._check(other)
        n = self.order
        out = [self.zero] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return self._like(out)

    def __truediv__(self, other: "Series") -> "Series":
        """Division by a series with invertible constant term."""
        self._check(other)
        inv0 = _inverse(other.coeffs[0])
        n = self.order
        out = [self.zero] * (n + 1)
        for k in range(n + 1):
            acc = self.coeffs[k]
            for i in range(1, k + 1):
                if other.coeffs[i] and out[k - i]:
                    acc = acc - other.coeffs[i] * out[k - i]
            out[k] = acc * inv0
        return self._like(out)

    def valuation(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order + 1

    def compose(self, inner: "Series") -> "Series":
        """self(inner(z)); inner must have valuation >= 1.

        Horner evaluation from the top; coefficients of self beyond
        order // valuation(inner) cannot contribute and are skipped.
        """
        self._check(inner)
        v = inner.valuation()
        if v < 1:
            raise ValueError("composition requires inner valuation >= 1")
        top = min(self.order // v, self.order)
        result = _const_series(self.coeffs[top], self.order, self.zero)
        for k in range(top - 1, -1, -1):
            result = result * inner
            result = result.add_const(self.coeffs[k])
        return result

    def map(self, fn: Callable, zero=None) -> "Series":
        """Apply fn to every coefficient (e.g. lift Fractions into VarJet)."""
        new_zero = self.zero if zero is None else zero
        return Series([fn(c) for c in self.coeffs], self.order, new_zero)

    def _check(self, other: "Series") -> None:
        if self.order != other.order:
            raise ValueError("series orders differ")


def _one_like(zero):
    return JET_ONE if isinstance(zero, VarJet) else Fraction(1)


def _const_series(value, order: int, zero) -> Series:
    coeffs = [zero] * (order + 1)
    coeffs[0] = value
    return Series(coeffs, order, zero)


def rational_series(numerator: Sequence, denominator: Sequence, order: int) -> Series:
    """Expansion of numerator(z)/denominator(z) with Fraction coefficients."""
    num = Series([Fraction(c) for c in numerator], order)
    den = Series([Fraction(c) for c in denominator], order)
    return num / den


def geometric(ratio_terms: dict[int, object], order: int, zero=Fraction(0)) -> Series:
    """1/(1 - g(z)) for a series g given by sparse terms with valuation >= 1."""
    g = Series.from_terms(ratio_terms, order, zero)
    if g.valuation() < 1:
        raise ValueError("geometric ratio needs valuation >= 1")
    one = _const_series(_one_like(zero), order, zero)
    return one / (one - g)
