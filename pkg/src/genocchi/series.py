"""Truncated power series in ``t`` with :class:`BivarPoly` coefficients.

Coefficients are stored in ordinary normalisation (``coeffs[n]`` multiplies
``t**n``); :func:`egf_coefficient` applies the ``n!`` when reading off an
exponential generating function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .algebra import ONE, ZERO, BivarPoly, poly_add, poly_mul, poly_scale

__all__ = [
    "EgfSeries",
    "SeriesOrderError",
    "series_add",
    "series_mul",
    "series_scale",
    "series_exp_linear",
    "series_inverse",
    "series_pow",
    "series_shift",
    "egf_coefficient",
]


class SeriesOrderError(ValueError):
    """Raised on mismatched truncation orders or out-of-range indices."""


@dataclass(frozen=True)
class EgfSeries:
    order: int
    coeffs: tuple[BivarPoly, ...]

    def __post_init__(self):
        if self.order < 0:
            raise SeriesOrderError("order must be >= 0")
        if len(self.coeffs) != self.order + 1:
            raise SeriesOrderError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[BivarPoly | int | Fraction], order: int | None = None) -> EgfSeries:
        """Build from ordinary coefficients, zero-padding or truncating to ``order``."""
        polys = [c if isinstance(c, BivarPoly) else BivarPoly.constant(c) for c in coeffs]
        if order is None:
            order = len(polys) - 1
        polys = (polys + [ZERO] * (order + 1))[: order + 1]
        return cls(order, tuple(polys))

    @classmethod
    def one(cls, order: int) -> EgfSeries:
        return cls(order, (ONE,) + (ZERO,) * order)

    @classmethod
    def zero(cls, order: int) -> EgfSeries:
        return cls(order, (ZERO,) * (order + 1))

    def truncate(self, order: int) -> EgfSeries:
        if order > self.order:
            raise SeriesOrderError(f"cannot extend a series of order {self.order} to {order}")
        return EgfSeries(order, self.coeffs[: order + 1])

    def __add__(self, other: EgfSeries) -> EgfSeries:
        return series_add(self, other)

    def __mul__(self, other: EgfSeries) -> EgfSeries:
        return series_mul(self, other)

    def __pow__(self, a: int) -> EgfSeries:
        return series_pow(self, a)


def _check_orders(a: EgfSeries, b: EgfSeries) -> None:
    if a.order != b.order:
        raise SeriesOrderError(f"series orders differ: {a.order} != {b.order}")


def series_add(a: EgfSeries, b: EgfSeries) -> EgfSeries:
    _check_orders(a, b)
    return EgfSeries(a.order, tuple(poly_add(p, q) for p, q in zip(a.coeffs, b.coeffs)))


def series_scale(a: EgfSeries, c: int | Fraction) -> EgfSeries:
    return EgfSeries(a.order, tuple(poly_scale(p, c) for p in a.coeffs))


def series_mul(a: EgfSeries, b: EgfSeries) -> EgfSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(a, b)
    n = a.order
    ac, bc = a.coeffs, b.coeffs
    a_nz = [i for i, p in enumerate(ac) if p]
    b_nz = [i for i, p in enumerate(bc) if p]
    out = [ZERO] * (n + 1)
    for i in a_nz:
        for k in b_nz:
            if i + k > n:
                break
            out[i + k] = poly_add(out[i + k], poly_mul(ac[i], bc[k]))
    return EgfSeries(n, tuple(out))


def series_shift(a: EgfSeries, k: int = 1) -> EgfSeries:
    """Multiply by ``t**k``, dropping terms past the order."""
    if k < 0:
        raise SeriesOrderError("shift must be >= 0")
    return EgfSeries(a.order, ((ZERO,) * k + a.coeffs)[: a.order + 1])


def series_exp_linear(c: BivarPoly | int | Fraction, j: int, order: int) -> EgfSeries:
    """``exp(c * t**j)`` truncated at ``order``: coefficient of ``t**(j*m)`` is ``c**m / m!``."""
    if j < 1:
        raise SeriesOrderError("j must be >= 1")
    if order < 0:
        raise SeriesOrderError("order must be >= 0")
    if not isinstance(c, BivarPoly):
        c = BivarPoly.constant(c)
    out = [ZERO] * (order + 1)
    power = ONE
    for m in range(order // j + 1):
        out[j * m] = poly_scale(power, Fraction(1, factorial(m)))
        power = poly_mul(power, c)
    return EgfSeries(order, tuple(out))


def series_inverse(a: EgfSeries) -> EgfSeries:
    """Multiplicative inverse; the constant term must be a nonzero rational."""
    a0 = a.coeffs[0]
    if not a0 or not a0.is_constant():
        raise ZeroDivisionError("leading coefficient not a unit")
    inv0 = 1 / a0.constant_term()
    b = [BivarPoly.constant(inv0)]
    for n in range(1, a.order + 1):
        acc = ZERO
        for k in range(1, n + 1):
            if a.coeffs[k]:
                acc = poly_add(acc, poly_mul(a.coeffs[k], b[n - k]))
        b.append(poly_scale(acc, -inv0))
    return EgfSeries(a.order, tuple(b))


def series_pow(a: EgfSeries, k: int) -> EgfSeries:
    if k < 0:
        raise SeriesOrderError("exponent must be >= 0")
    result = EgfSeries.one(a.order)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def egf_coefficient(a: EgfSeries, n: int) -> BivarPoly:
    """``n! * coeffs[n]``: the n-th coefficient in exponential normalisation."""
    if n < 0 or n > a.order:
        raise SeriesOrderError(f"index {n} outside 0..{a.order}")
    return poly_scale(a.coeffs[n], factorial(n))
