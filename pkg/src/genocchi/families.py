"""Genocchi-type polynomial families built from their generating functions.

Every family is read off a truncated series::

    classical Genocchi        2t / (e^t + 1)                      [* e^{xt}]
    second-kind Genocchi      (2t / (e^t + e^{-t}))^a             [* e^{xt}]
    second-kind Euler         (2 / (e^t + e^{-t}))^a              [* e^{xt}]
    Gould-Hopper              e^{xt + y t^j}
    Hermite-based Genocchi    (2t / (e^t + e^{-t}))^a * e^{xt + y t^j}
    Hermite-based Euler       (2 / (e^t + e^{-t}))^a  * e^{xt + y t^j}

The closed forms (binomial sums, the Gould-Hopper floor sum) are kept as
separate functions and only ever used to cross-check the series route.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .algebra import ZERO, BivarPoly, X, Y, poly_add
from .series import (
    EgfSeries,
    egf_coefficient,
    series_add,
    series_exp_linear,
    series_inverse,
    series_mul,
    series_pow,
    series_scale,
    series_shift,
)

__all__ = [
    "Family",
    "Kernel",
    "FamilySpec",
    "FamilyValue",
    "RouteMismatch",
    "kernel_series",
    "clear_caches",
    "family_series",
    "family_table",
    "classical_genocchi",
    "classical_genocchi_binomial",
    "second_kind_genocchi",
    "second_kind_genocchi_binomial",
    "second_kind_euler",
    "gould_hopper",
    "gould_hopper_closed_form",
    "hermite_genocchi",
    "hermite_euler",
    "evaluate",
    "make_spec",
    "member",
]


class Family(enum.Enum):
    CLASSICAL_GENOCCHI = "classical-genocchi"
    SECOND_KIND_GENOCCHI = "second-kind-genocchi"
    SECOND_KIND_EULER = "second-kind-euler"
    GOULD_HOPPER = "gould-hopper"
    HERMITE_GENOCCHI = "hermite-genocchi"
    HERMITE_EULER = "hermite-euler"

    @property
    def is_hermite(self) -> bool:
        return self in (Family.GOULD_HOPPER, Family.HERMITE_GENOCCHI, Family.HERMITE_EULER)


class Kernel(enum.Enum):
    """Non-exponential factors of the generating functions."""

    CLASSICAL_GENOCCHI = "2t/(e^t+1)"
    CLASSICAL_EULER = "2/(e^t+1)"
    SECOND_KIND_GENOCCHI = "2t/(e^t+e^-t)"
    SECOND_KIND_EULER = "2/(e^t+e^-t)"


_FAMILY_KERNEL = {
    Family.CLASSICAL_GENOCCHI: Kernel.CLASSICAL_GENOCCHI,
    Family.SECOND_KIND_GENOCCHI: Kernel.SECOND_KIND_GENOCCHI,
    Family.SECOND_KIND_EULER: Kernel.SECOND_KIND_EULER,
    Family.GOULD_HOPPER: None,
    Family.HERMITE_GENOCCHI: Kernel.SECOND_KIND_GENOCCHI,
    Family.HERMITE_EULER: Kernel.SECOND_KIND_EULER,
}


class RouteMismatch(ArithmeticError):
    """Two independent computations of the same polynomial disagree."""


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    j: int | None = None
    a: int = 1

    def __post_init__(self):
        if self.a < 0:
            raise ValueError(f"order a must be >= 0, got {self.a}")
        if self.family is Family.GOULD_HOPPER:
            if self.j is None or self.j < 2:
                raise ValueError(f"gould-hopper requires j >= 2, got {self.j}")
        elif self.family.is_hermite:
            if self.j is None or self.j < 1:
                raise ValueError(f"{self.family.value} requires j >= 1, got {self.j}")
        elif self.j is not None:
            raise ValueError(f"{self.family.value} takes no j parameter")
        if self.family is Family.CLASSICAL_GENOCCHI and self.a != 1:
            raise ValueError("classical-genocchi is defined for a = 1 only")

    @property
    def kernel(self) -> Kernel | None:
        return _FAMILY_KERNEL[self.family]


@dataclass(frozen=True)
class FamilyValue:
    n: int
    value: BivarPoly
    spec: FamilySpec | None = field(default=None, compare=False)


# ---------------------------------------------------------------------------
# Kernels (memoised; lru_cache is safe for concurrent lookups and at worst
# recomputes an entry, which is idempotent)


@lru_cache(maxsize=None)
def _second_kind_reciprocal(order: int) -> EgfSeries:
    # 1 / (e^t + e^{-t}), built from the two exponentials literally
    denom = series_add(series_exp_linear(1, 1, order), series_exp_linear(-1, 1, order))
    return series_inverse(denom)


@lru_cache(maxsize=None)
def _classical_reciprocal(order: int) -> EgfSeries:
    # 1 / (e^t + 1)
    denom = series_add(series_exp_linear(1, 1, order), EgfSeries.one(order))
    return series_inverse(denom)


@lru_cache(maxsize=None)
def kernel_series(kernel: Kernel, order: int, a: int = 1) -> EgfSeries:
    """``kernel**a`` truncated at ``order``."""
    if a < 0:
        raise ValueError("a must be >= 0")
    if a == 0:
        return EgfSeries.one(order)
    if a > 1:
        return series_pow(kernel_series(kernel, order, 1), a)
    if kernel in (Kernel.SECOND_KIND_GENOCCHI, Kernel.SECOND_KIND_EULER):
        base = series_scale(_second_kind_reciprocal(order), 2)
    else:
        base = series_scale(_classical_reciprocal(order), 2)
    if kernel in (Kernel.SECOND_KIND_GENOCCHI, Kernel.CLASSICAL_GENOCCHI):
        base = series_shift(base, 1)
    return base


def clear_caches() -> None:
    """Drop all memoised kernel series."""
    _second_kind_reciprocal.cache_clear()
    _classical_reciprocal.cache_clear()
    kernel_series.cache_clear()


def family_series(spec: FamilySpec, order: int, symbolic: bool = True) -> EgfSeries:
    """Generating function of ``spec`` truncated at ``order``.

    With ``symbolic=False`` the ``e^{xt}`` factor is left out, giving the
    number sequence (Hermite families keep ``e^{y t^j}``).
    """
    s = EgfSeries.one(order) if spec.kernel is None else kernel_series(spec.kernel, order, spec.a)
    if symbolic:
        s = series_mul(s, series_exp_linear(X, 1, order))
    if spec.family.is_hermite:
        s = series_mul(s, series_exp_linear(Y, spec.j, order))
    return s


def family_table(spec: FamilySpec, n_max: int, symbolic: bool = True) -> list[BivarPoly]:
    """All members ``0..n_max`` from a single series of order ``n_max``."""
    s = family_series(spec, n_max, symbolic)
    return [egf_coefficient(s, n) for n in range(n_max + 1)]


def _member(spec: FamilySpec, n: int, symbolic: bool = True) -> BivarPoly:
    if n < 0:
        raise ValueError("n must be >= 0")
    return egf_coefficient(family_series(spec, n, symbolic), n)


def _cross_check(name: str, n: int, a: BivarPoly, b: BivarPoly) -> None:
    if a != b:
        raise RouteMismatch(f"{name} n={n}: generating function gives {a}, closed form gives {b}")


# ---------------------------------------------------------------------------
# Closed forms used as second routes


def classical_genocchi_binomial(n: int) -> BivarPoly:
    """``G_n(x) = sum_k C(n,k) G_k x^(n-k)`` from the Genocchi numbers."""
    numbers = family_table(FamilySpec(Family.CLASSICAL_GENOCCHI), n, symbolic=False)
    return _binomial_sum(numbers, n)


def second_kind_genocchi_binomial(n: int) -> BivarPoly:
    """``G_n(x) = sum_k C(n,k) x^(n-k) G_k`` for the second-kind numbers (order 1)."""
    numbers = family_table(FamilySpec(Family.SECOND_KIND_GENOCCHI), n, symbolic=False)
    return _binomial_sum(numbers, n)


def _binomial_sum(numbers: list[BivarPoly], n: int) -> BivarPoly:
    out = ZERO
    for k in range(n + 1):
        c = numbers[k].constant_term()
        if c:
            out = poly_add(out, BivarPoly.monomial(n - k, 0, comb(n, k) * c))
    return out


def gould_hopper_closed_form(n: int, j: int) -> BivarPoly:
    """``n! * sum_r x^(n-jr) y^r / (r! (n-jr)!)`` for ``r <= n // j``."""
    if j < 1:
        raise ValueError("j must be >= 1")
    return BivarPoly(
        ((n - j * r, r), Fraction(factorial(n), factorial(r) * factorial(n - j * r)))
        for r in range(n // j + 1)
    )


# ---------------------------------------------------------------------------
# Public constructors


def classical_genocchi(n: int, symbolic: bool = True, cross_check: bool = True) -> FamilyValue:
    spec = FamilySpec(Family.CLASSICAL_GENOCCHI)
    value = _member(spec, n, symbolic)
    if symbolic and cross_check:
        _cross_check("classical_genocchi", n, value, classical_genocchi_binomial(n))
    return FamilyValue(n, value, spec)


def second_kind_genocchi(n: int, a: int = 1, symbolic: bool = True, cross_check: bool = True) -> FamilyValue:
    spec = FamilySpec(Family.SECOND_KIND_GENOCCHI, a=a)
    value = _member(spec, n, symbolic)
    if symbolic and cross_check and a == 1:
        _cross_check("second_kind_genocchi", n, value, second_kind_genocchi_binomial(n))
    return FamilyValue(n, value, spec)


def second_kind_euler(n: int, a: int = 1, symbolic: bool = True) -> FamilyValue:
    spec = FamilySpec(Family.SECOND_KIND_EULER, a=a)
    return FamilyValue(n, _member(spec, n, symbolic), spec)


def gould_hopper(n: int, j: int, cross_check: bool = True) -> FamilyValue:
    spec = FamilySpec(Family.GOULD_HOPPER, j=j, a=0)
    value = _member(spec, n)
    if cross_check:
        _cross_check("gould_hopper", n, value, gould_hopper_closed_form(n, j))
    return FamilyValue(n, value, spec)


def hermite_genocchi(n: int, j: int, a: int = 1) -> FamilyValue:
    spec = FamilySpec(Family.HERMITE_GENOCCHI, j=j, a=a)
    return FamilyValue(n, _member(spec, n), spec)


def hermite_euler(n: int, j: int, a: int = 1) -> FamilyValue:
    spec = FamilySpec(Family.HERMITE_EULER, j=j, a=a)
    return FamilyValue(n, _member(spec, n), spec)


def evaluate(v: FamilyValue | BivarPoly, x_val: Fraction | int, y_val: Fraction | int = 0) -> Fraction:
    """Exact value of a family member at the rational point ``(x_val, y_val)``."""
    p = v.value if isinstance(v, FamilyValue) else v
    return p.evaluate(x_val, y_val)


def make_spec(family: Family | str, j: int | None = None, a: int | None = None) -> FamilySpec:
    """Build a :class:`FamilySpec` filling in per-family defaults."""
    family = Family(family)
    if family is Family.GOULD_HOPPER:
        if a not in (None, 0):
            raise ValueError("gould-hopper takes no order a")
        return FamilySpec(family, j=j, a=0)
    return FamilySpec(family, j=j, a=1 if a is None else a)


def member(spec: FamilySpec, n: int, symbolic: bool = True) -> FamilyValue:
    """Dispatch to the constructor for ``spec``."""
    return FamilyValue(n, _member(spec, n, symbolic), spec)

