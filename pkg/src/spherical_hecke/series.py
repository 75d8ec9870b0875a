"""Truncated power series in ``X`` with :class:`MPoly` coefficients."""

from __future__ import annotations

from typing import Sequence

from .multipoly import MPoly

__all__ = ["XSeries", "series_arith", "series_inv", "DEFAULT_ORDER"]

DEFAULT_ORDER = 8


class XSeries:
    """``sum_{k <= order} coeffs[k] * X**k``, exact through ``order``."""

    __slots__ = ("nvars", "order", "coeffs")

    def __init__(self, nvars: int, order: int, coeffs: Sequence[MPoly] = ()):
        if order < 0:
            raise ValueError("series order must be non-negative")
        self.nvars = nvars
        self.order = order
        cs = list(coeffs)[: order + 1]
        for c in cs:
            if c.nvars != nvars:
                raise ValueError("coefficient ring mismatch")
        cs += [MPoly.zero(nvars) for _ in range(order + 1 - len(cs))]
        self.coeffs = cs

    @classmethod
    def one(cls, nvars: int, order: int) -> "XSeries":
        return cls(nvars, order, [MPoly.const(nvars, 1)])

    @classmethod
    def from_poly(cls, coeffs: Sequence[MPoly], order: int | None = None) -> "XSeries":
        """Series of a polynomial in X; by default its order is the degree."""
        coeffs = list(coeffs)
        if order is None:
            order = max(len(coeffs) - 1, 0)
        return cls(coeffs[0].nvars, order, coeffs)

    def __getitem__(self, k: int) -> MPoly:
        if k > self.order:
            raise IndexError(f"X^{k} is beyond the truncation order {self.order}")
        return self.coeffs[k]

    def degree(self) -> int:
        """Index of the highest nonzero stored coefficient (-1 for zero)."""
        for k in range(self.order, -1, -1):
            if not self.coeffs[k].is_zero():
                return k
        return -1

    def truncate(self, order: int) -> "XSeries":
        return XSeries(self.nvars, min(order, self.order), self.coeffs)

    def __add__(self, other: "XSeries") -> "XSeries":
        n = min(self.order, other.order)
        return XSeries(self.nvars, n, [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __neg__(self):
        return XSeries(self.nvars, self.order, [-c for c in self.coeffs])

    def __sub__(self, other: "XSeries") -> "XSeries":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, XSeries):
            return XSeries(self.nvars, self.order, [c * other for c in self.coeffs])
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = MPoly.zero(self.nvars)
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if a.terms and b.terms:
                    acc = acc + a * b
            out.append(acc)
        return XSeries(self.nvars, n, out)

    def __eq__(self, other):
        if not isinstance(other, XSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    def first_mismatch(self, other: "XSeries"):
        """Smallest ``k`` where the two series differ, or None."""
        n = min(self.order, other.order)
        for k in range(n + 1):
            if self.coeffs[k] != other.coeffs[k]:
                return k
        return None

    def map(self, fn) -> "XSeries":
        return XSeries(self.nvars, self.order, [fn(c) for c in self.coeffs])

    def inverse(self) -> "XSeries":
        return series_inv(self)

    def __repr__(self):
        return f"XSeries(nvars={self.nvars}, order={self.order}, degree={self.degree()})"


def series_arith(a: XSeries, b: XSeries, kind: str) -> XSeries:
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown series operation {kind!r}")


def series_inv(a: XSeries) -> XSeries:
    """Multiplicative inverse of a series with constant term 1."""
    if a.coeffs[0] != MPoly.const(a.nvars, 1):
        raise ValueError("series inverse needs constant term 1")
    b = [MPoly.const(a.nvars, 1)]
    for k in range(1, a.order + 1):
        acc = MPoly.zero(a.nvars)
        for i in range(1, k + 1):
            if a.coeffs[i].terms and b[k - i].terms:
                acc = acc + a.coeffs[i] * b[k - i]
        b.append(-acc)
    return XSeries(a.nvars, a.order, b)
