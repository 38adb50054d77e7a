"""Truncated formal power series in q with exact rational coefficients.

A series of order N stores the N+1 coefficients of q^0 .. q^N.  All operations
are exact and truncation-consistent: combining order-N inputs yields an
order-N output whose coefficients are correct through q^N.
"""

from __future__ import annotations

import math
from fractions import Fraction


class BadConstantTerm(ValueError):
    """The constant term does not satisfy the operation's precondition."""


class PowerSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([Fraction(0)] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([Fraction(1)] + [Fraction(0)] * order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def truncated(self, order: int) -> "PowerSeries":
        if order >= self.order:
            return PowerSeries(self.coeffs + [Fraction(0)] * (order - self.order))
        return PowerSeries(self.coeffs[: order + 1])

    def _common_order(self, other: "PowerSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = self._common_order(other)
        return PowerSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n = self._common_order(other)
        return PowerSeries([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        n = self._common_order(other)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return PowerSeries(out)

    def scaled(self, c) -> "PowerSeries":
        c = Fraction(c)
        return PowerSeries([a * c for a in self.coeffs])

    def with_sign(self, sigma: int) -> "PowerSeries":
        """Substitute q -> sigma*q for sigma in {+1, -1}."""
        if sigma == 1:
            return self
        if sigma != -1:
            raise ValueError("sigma must be +1 or -1")
        return PowerSeries([a if n % 2 == 0 else -a for n, a in enumerate(self.coeffs)])

    def recip(self) -> "PowerSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise BadConstantTerm("reciprocal needs a nonzero constant term")
        n = self.order
        out = [Fraction(1) / a0] + [Fraction(0)] * n
        for k in range(1, n + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                acc += self.coeffs[i] * out[k - i]
            out[k] = -acc / a0
        return PowerSeries(out)

    def log(self) -> "PowerSeries":
        """Formal logarithm; requires constant term 1."""
        if self.coeffs[0] != 1:
            raise BadConstantTerm("log needs constant term 1")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        # n*a_n = sum_{k=1..n} k*L_k*a_{n-k}, solved for L_n
        for m in range(1, n + 1):
            acc = m * self.coeffs[m]
            for k in range(1, m):
                acc -= k * out[k] * self.coeffs[m - k]
            out[m] = acc / m
        return PowerSeries(out)

    def exp(self) -> "PowerSeries":
        """Formal exponential; requires constant term 0."""
        if self.coeffs[0] != 0:
            raise BadConstantTerm("exp needs constant term 0")
        n = self.order
        out = [Fraction(1)] + [Fraction(0)] * n
        for m in range(1, n + 1):
            acc = Fraction(0)
            for k in range(1, m + 1):
                acc += k * self.coeffs[k] * out[m - k]
            out[m] = acc / m
        return PowerSeries(out)

    def pow(self, alpha) -> "PowerSeries":
        """Rational power exp(alpha * log), requires constant term 1."""
        if self.coeffs[0] != 1:
            raise BadConstantTerm("pow needs constant term 1")
        return self.log().scaled(Fraction(alpha)).exp()

    def __repr__(self) -> str:
        bits = []
        for n, a in enumerate(self.coeffs):
            if a:
                bits.append("%s*q^%d" % (a, n))
        return "PowerSeries(%s)" % (" + ".join(bits) or "0")


def macmahon_series(order: int) -> PowerSeries:
    """The product over i >= 1 of (1 - q^i)^(-i), truncated at the given order.

    The i-th factor expands as sum_k binomial(i+k-1, k) q^(i*k); factors with
    i > order contribute only 1 at this truncation.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    acc = PowerSeries.one(order)
    for i in range(1, order + 1):
        coeffs = [Fraction(0)] * (order + 1)
        for k in range(0, order // i + 1):
            coeffs[i * k] = Fraction(math.comb(i + k - 1, k))
        acc = acc * PowerSeries(coeffs)
    return acc
