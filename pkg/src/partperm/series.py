"""Truncated power series in one variable with exact rational coefficients."""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .combinatorics import Partition, z_value
from .errors import EmptyPartition, NonInvertibleSeries, OrderExceeded


class TruncatedSeries:
    """sum c_k t^k modulo t^(order+1).

    >>> s = TruncatedSeries([1, 1], order=3)
    >>> (s * s).coeffs
    (Fraction(1, 1), Fraction(2, 1), Fraction(1, 1), Fraction(0, 1))
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = max(len(cs) - 1, 0)
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls([c], order)

    @classmethod
    def monomial(cls, k: int, order: int, c=1) -> "TruncatedSeries":
        cs = [0] * (order + 1)
        if k <= order:
            cs[k] = c
        return cls(cs, order)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[: order + 1], min(order, self.order))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Rational)):
            return TruncatedSeries.constant(other, self.order)
        raise TypeError(f"cannot combine a series with {type(other).__name__}")

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries((a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)), n)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return self._coerce(other) - self

    def scalar_mul(self, c) -> "TruncatedSeries":
        c = Fraction(c)
        return TruncatedSeries((c * a for a in self.coeffs), self.order)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Rational)):
            return self.scalar_mul(other)
        other = self._coerce(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            if a[i]:
                for j in range(n + 1 - i):
                    out[i + j] += a[i] * b[j]
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        a = self.coeffs
        if a[0] == 0:
            raise NonInvertibleSeries("constant term is zero")
        inv = [Fraction(0)] * (self.order + 1)
        inv[0] = 1 / a[0]
        for k in range(1, self.order + 1):
            inv[k] = -sum(a[j] * inv[k - j] for j in range(1, k + 1)) * inv[0]
        return TruncatedSeries(inv, self.order)

    def int_pow(self, k: int) -> "TruncatedSeries":
        if k < 0:
            return self.inverse().int_pow(-k)
        out = TruncatedSeries.constant(1, self.order)
        for _ in range(k):
            out = out * self
        return out

    def __pow__(self, k: int) -> "TruncatedSeries":
        return self.int_pow(k)

    def scale_arg(self, m: int) -> "TruncatedSeries":
        """s(m t)."""
        if m < 1:
            raise ValueError("scale factor must be a positive integer")
        return TruncatedSeries((c * m**k for k, c in enumerate(self.coeffs)), self.order)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by t^k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return TruncatedSeries([0] * k + list(self.coeffs[: self.order + 1 - k]), self.order)

    def coefficient(self, k: int) -> Fraction:
        if k < 0:
            return Fraction(0)
        if k > self.order:
            raise OrderExceeded(f"t^{k} is beyond the truncation order {self.order}")
        return self.coeffs[k]

    def egf_coefficient(self, k: int) -> Fraction:
        """k! times the coefficient of t^k."""
        return math.factorial(k) * self.coefficient(k) if k >= 0 else Fraction(0)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "TruncatedSeries":
        return cls([Fraction(c) for c in data], len(data) - 1)

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"


def coefficient(s: TruncatedSeries, k: int) -> Fraction:
    return s.coefficient(k)


def exp_series(order: int) -> TruncatedSeries:
    return TruncatedSeries((Fraction(1, math.factorial(k)) for k in range(order + 1)), order)


def f_series(order: int) -> TruncatedSeries:
    """2 sinh(t/2) / t = sum t^(2k) / (4^k (2k+1)!)."""
    return TruncatedSeries(
        (Fraction(1, 4 ** (k // 2) * math.factorial(k + 1)) if k % 2 == 0 else 0 for k in range(order + 1)),
        order,
    )


def _nonempty(lam: Sequence[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        raise EmptyPartition("phi series needs a nonempty partition")
    return lam


def phi_series_sinh(lam: Sequence[int], order: int) -> TruncatedSeries:
    """t^(|lam|+l-2) f(t)^(|lam|-2) prod lam_i f(lam_i t), over |lam|! z_lam."""
    lam = _nonempty(lam)
    f = f_series(order)
    s = f.int_pow(lam.weight - 2)
    for part in lam:
        s = s * f.scale_arg(part).scalar_mul(part)
    s = s.shift(lam.weight + lam.length - 2)
    return s.scalar_mul(Fraction(1, math.factorial(lam.weight) * z_value(lam)))


def q_integer(m: int, q: TruncatedSeries) -> TruncatedSeries:
    """1 + q + ... + q^(m-1)."""
    out = TruncatedSeries.constant(0, q.order)
    term = TruncatedSeries.constant(1, q.order)
    for _ in range(m):
        out = out + term
        term = term * q
    return out


def phi_series_q(lam: Sequence[int], order: int) -> TruncatedSeries:
    """(1 - q^-1)^(|lam|-1) prod(q^lam_i - 1) / (q - 1) / (|lam|! z_lam) at q = e^t.

    The single (q - 1) denominator is cancelled through q-integers:
    prod(q^lam_i - 1) / (q - 1) = (q - 1)^(l - 1) prod [lam_i]_q.
    """
    lam = _nonempty(lam)
    q = exp_series(order)
    s = (1 - q.inverse()).int_pow(lam.weight - 1) * (q - 1).int_pow(lam.length - 1)
    for part in lam:
        s = s * q_integer(part, q)
    return s.scalar_mul(Fraction(1, math.factorial(lam.weight) * z_value(lam)))
