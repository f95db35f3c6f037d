"""Independent reference computations used by the tests.

Nothing here imports the package under test: univariate series are plain
lists of Fractions and polynomials are handled by sympy.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import sympy as sp

t, x, y = sp.symbols("t x y")


def naive_inverse(a: list[Fraction]) -> list[Fraction]:
    """Solve sum_k a_k b_(n-k) = [n == 0] term by term."""
    b = [Fraction(1) / a[0]]
    for n in range(1, len(a)):
        b.append(-sum(a[k] * b[n - k] for k in range(1, n + 1)) / a[0])
    return b


def naive_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = len(a)
    return [sum(a[k] * b[m - k] for k in range(m + 1)) for m in range(n)]


def exp_coeffs(c: Fraction, order: int) -> list[Fraction]:
    return [Fraction(c) ** n / factorial(n) for n in range(order + 1)]


def genocchi_numbers(n_max: int) -> list[Fraction]:
    """EGF coefficients of 2t / (e^t + 1)."""
    denom = [e + (1 if i == 0 else 0) for i, e in enumerate(exp_coeffs(1, n_max))]
    inv = naive_inverse(denom)
    kern = [Fraction(0)] + [2 * c for c in inv[:-1]]
    return [kern[n] * factorial(n) for n in range(n_max + 1)]


def second_kind_numbers(n_max: int, a: int = 1, with_t: bool = True) -> list[Fraction]:
    """EGF coefficients of (2t / (e^t + e^-t))^a, or (2 / ...)^a if not with_t."""
    denom = [p + m for p, m in zip(exp_coeffs(1, n_max), exp_coeffs(-1, n_max))]
    base = [2 * c for c in naive_inverse(denom)]
    if with_t:
        base = [Fraction(0)] + base[:-1]
    acc = [Fraction(1)] + [Fraction(0)] * n_max
    for _ in range(a):
        acc = naive_mul(acc, base)
    return [acc[n] * factorial(n) for n in range(n_max + 1)]


def sympy_egf(expr, n: int):
    """n-th EGF coefficient of a sympy expression in t, as an expanded polynomial."""
    ser = sp.series(expr, t, 0, n + 1).removeO()
    return sp.expand(ser.coeff(t, n) * sp.factorial(n))


def gould_hopper_brute(n: int, j: int):
    """Coefficient extraction from the double sum of e^{xt} e^{y t^j}."""
    total = 0
    for r in range(n // j + 1):
        total += sp.Rational(factorial(n), factorial(n - j * r) * factorial(r)) * x ** (n - j * r) * y**r
    return sp.expand(total)


def to_sympy(p) -> sp.Expr:
    return sp.Add(*[sp.Rational(c.numerator, c.denominator) * x**i * y**j for (i, j), c in p.items()])


def binomial(n: int, k: int) -> int:
    return comb(n, k)
