"""Executable checks of the identities satisfied by the Genocchi families.

Each check compares two independently computed sides as canonical
:class:`BivarPoly` values; there is no tolerance anywhere.  Mismatches are
collected in an :class:`IdentityReport` rather than raised.

Conventions for identities in two arguments ``x`` and ``x1`` (Lemma-style
addition formulas): ``x1`` is carried by the second symbol ``y``.
"""

from __future__ import annotations

import enum
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable

from .algebra import ZERO, BivarPoly, X, Y, poly_add, poly_mul, poly_partial, poly_scale, poly_substitute
from .families import Family, FamilySpec, Kernel, family_table, kernel_series
from .series import egf_coefficient, series_exp_linear, series_mul

__all__ = [
    "IdentityId",
    "Status",
    "Mismatch",
    "IdentityReport",
    "VerifierConfig",
    "check_geno_binom",
    "check_skg_binom",
    "check_rescale",
    "check_triple_multinomial",
    "check_rescale_and_multinomial",
    "check_euler_ratio",
    "check_lemma1_addition",
    "check_lemma1_euler_conv",
    "check_hg_euler_quotient",
    "check_derivative",
    "check_thm1_floor_sum",
    "check_thm2_addition",
    "check_thm3_convolution",
    "check_heat_equation",
    "check_printed_heat_equation",
    "grid_points",
    "run_identity",
    "run_all",
]


class IdentityId(enum.Enum):
    GENO_BINOM = "GENO_BINOM"
    SKG_BINOM = "SKG_BINOM"
    SKG_RESCALE = "SKG_RESCALE"
    SKG_TRIPLE_MULTINOMIAL = "SKG_TRIPLE_MULTINOMIAL"
    SKG_EULER_RATIO = "SKG_EULER_RATIO"
    LEMMA1_ADDITION = "LEMMA1_ADDITION"
    LEMMA1_EULER_CONV = "LEMMA1_EULER_CONV"
    HG_EULER_QUOTIENT = "HG_EULER_QUOTIENT"
    HG_DERIVATIVE = "HG_DERIVATIVE"
    THM1_FLOOR_SUM = "THM1_FLOOR_SUM"
    THM2_ADDITION = "THM2_ADDITION"
    THM3_CONVOLUTION = "THM3_CONVOLUTION"
    HEAT_EQUATION = "HEAT_EQUATION"


class Status(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    OBSERVATIONAL = "OBSERVATIONAL"


@dataclass(frozen=True)
class Mismatch:
    params: dict
    lhs: BivarPoly
    rhs: BivarPoly

    def to_dict(self) -> dict:
        return {"params": self.params, "lhs": self.lhs.to_records(), "rhs": self.rhs.to_records()}


GridPoint = tuple  # (n, j, a, b); None where a parameter does not apply


@dataclass
class IdentityReport:
    identity: IdentityId
    parameter_grid: list[GridPoint] = field(default_factory=list)
    failures: list[Mismatch] = field(default_factory=list)
    observations: list[Mismatch] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    observational: bool = False

    @property
    def status(self) -> Status:
        if self.observational:
            return Status.OBSERVATIONAL
        return Status.FAIL if self.failures else Status.PASS

    @property
    def passed(self) -> bool:
        return not self.failures

    def compare(self, params: dict, lhs: BivarPoly, rhs: BivarPoly) -> bool:
        if lhs == rhs:
            return True
        self.failures.append(Mismatch(dict(params), lhs, rhs))
        return False

    def observe(self, params: dict, lhs: BivarPoly, rhs: BivarPoly) -> bool:
        if lhs == rhs:
            return True
        self.observations.append(Mismatch(dict(params), lhs, rhs))
        return False

    def to_dict(self) -> dict:
        return {
            "identity": self.identity.value,
            "grid": [list(g) for g in self.parameter_grid],
            "status": self.status.value,
            "failures": [f.to_dict() for f in self.failures],
            "observations": [o.to_dict() for o in self.observations],
            "notes": list(self.notes),
            "elapsed_ms": int(round(self.elapsed * 1000)),
        }


class _timed:
    def __init__(self, report: IdentityReport):
        self.report = report

    def __enter__(self):
        self._t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed = time.perf_counter() - self._t0
        return False


def _check_bounds(**bounds: int) -> None:
    for name, v in bounds.items():
        if v < 0:
            raise ValueError(f"{name} must be >= 0, got {v}")


def _check_j_set(j_set: Iterable[int]) -> tuple[int, ...]:
    js = tuple(sorted(set(j_set)))
    bad = [j for j in js if j < 2]
    if bad:
        raise ValueError(f"identity checks need j >= 2, got {bad}")
    return js


# ---------------------------------------------------------------------------
# Tables shared by several checks


def _skg_table(n_max: int, a: int = 1, symbolic: bool = True) -> list[BivarPoly]:
    return family_table(FamilySpec(Family.SECOND_KIND_GENOCCHI, a=a), n_max, symbolic)


def _ske_table(n_max: int, a: int = 1, symbolic: bool = True) -> list[BivarPoly]:
    return family_table(FamilySpec(Family.SECOND_KIND_EULER, a=a), n_max, symbolic)


def _hg_table(n_max: int, j: int, a: int) -> list[BivarPoly]:
    return family_table(FamilySpec(Family.HERMITE_GENOCCHI, j=j, a=a), n_max)


def _he_table(n_max: int, j: int, a: int) -> list[BivarPoly]:
    return family_table(FamilySpec(Family.HERMITE_EULER, j=j, a=a), n_max)


def _gh_table(n_max: int, j: int) -> list[BivarPoly]:
    return family_table(FamilySpec(Family.GOULD_HOPPER, j=j, a=0), n_max)


def _kernel_table(kernel: Kernel, n_max: int, a: int, symbolic: bool) -> list[BivarPoly]:
    s = kernel_series(kernel, n_max, a)
    if symbolic:
        s = series_mul(s, series_exp_linear(X, 1, n_max))
    return [egf_coefficient(s, n) for n in range(n_max + 1)]


def _binomial_convolution(n: int, left: list[BivarPoly], right: list[BivarPoly]) -> BivarPoly:
    out = ZERO
    for k in range(n + 1):
        if left[k] and right[n - k]:
            out = poly_add(out, poly_scale(poly_mul(left[k], right[n - k]), comb(n, k)))
    return out


def _as_x1(p: BivarPoly) -> BivarPoly:
    # p(x) -> p(x1), with x1 carried by the symbol y
    return poly_substitute(p, Y, X)


# ---------------------------------------------------------------------------
# Binomial expansions, rescaling, Euler ratio


def check_geno_binom(n_max: int) -> IdentityReport:
    """``G_n(x) = sum_k C(n,k) G_k x^(n-k)`` for the classical Genocchi family."""
    _check_bounds(n_max=n_max)
    report = IdentityReport(IdentityId.GENO_BINOM)
    with _timed(report):
        spec = FamilySpec(Family.CLASSICAL_GENOCCHI)
        polys = family_table(spec, n_max)
        numbers = family_table(spec, n_max, symbolic=False)
        for n in range(n_max + 1):
            report.parameter_grid.append((n, None, 1, None))
            rhs = ZERO
            for k in range(n + 1):
                rhs = poly_add(rhs, poly_scale(BivarPoly.monomial(n - k), comb(n, k) * numbers[k].constant_term()))
            report.compare({"n": n}, polys[n], rhs)
    return report


def check_skg_binom(n_max: int) -> IdentityReport:
    """Second-kind Genocchi polynomials from the second-kind numbers (order 1)."""
    _check_bounds(n_max=n_max)
    report = IdentityReport(IdentityId.SKG_BINOM)
    with _timed(report):
        polys = _skg_table(n_max)
        numbers = _skg_table(n_max, symbolic=False)
        for n in range(n_max + 1):
            report.parameter_grid.append((n, None, 1, None))
            rhs = ZERO
            for k in range(n + 1):
                rhs = poly_add(rhs, poly_scale(BivarPoly.monomial(n - k), comb(n, k) * numbers[k].constant_term()))
            report.compare({"n": n}, polys[n], rhs)
    return report


def _rescaled_classical(n: int, classical: BivarPoly) -> BivarPoly:
    # 2^(n-1) G_n((x + 1) / 2)
    half_shift = poly_scale(X + 1, Fraction(1, 2))
    return poly_scale(poly_substitute(classical, half_shift, Y), Fraction(2) ** (n - 1))


def _triple_multinomial(n: int, numbers: list[BivarPoly]) -> BivarPoly:
    out = ZERO
    for k in range(n + 1):
        g = numbers[k].constant_term()
        if not g:
            continue
        for i in range(n - k + 1):
            c = Fraction(factorial(n), factorial(k) * factorial(i) * factorial(n - k - i))
            out = poly_add(out, BivarPoly.monomial(n - k - i, 0, c * Fraction(2) ** (k - 1) * g))
    return out


def check_rescale(n_max: int) -> IdentityReport:
    """Second-kind Genocchi polynomial equals ``2^(n-1) G_n((x+1)/2)``."""
    _check_bounds(n_max=n_max)
    report = IdentityReport(IdentityId.SKG_RESCALE)
    with _timed(report):
        skg = _skg_table(n_max)
        classical = family_table(FamilySpec(Family.CLASSICAL_GENOCCHI), n_max)
        for n in range(n_max + 1):
            report.parameter_grid.append((n, None, 1, None))
            report.compare({"n": n}, skg[n], _rescaled_classical(n, classical[n]))
    return report


def check_triple_multinomial(n_max: int) -> IdentityReport:
    """Triple multinomial sum over the classical Genocchi numbers.

    Compared both against the generating-function values and against the
    rescaled classical polynomials.
    """
    _check_bounds(n_max=n_max)
    report = IdentityReport(IdentityId.SKG_TRIPLE_MULTINOMIAL)
    with _timed(report):
        skg = _skg_table(n_max)
        classical = family_table(FamilySpec(Family.CLASSICAL_GENOCCHI), n_max)
        numbers = family_table(FamilySpec(Family.CLASSICAL_GENOCCHI), n_max, symbolic=False)
        for n in range(n_max + 1):
            report.parameter_grid.append((n, None, 1, None))
            rhs = _triple_multinomial(n, numbers)
            report.compare({"n": n, "against": "generating function"}, skg[n], rhs)
            report.compare({"n": n, "against": "rescaled classical"}, _rescaled_classical(n, classical[n]), rhs)
    return report


def check_rescale_and_multinomial(n_max: int) -> tuple[IdentityReport, IdentityReport]:
    return check_rescale(n_max), check_triple_multinomial(n_max)


def check_euler_ratio(n_max: int, j_set: Iterable[int] = ()) -> IdentityReport:
    """``G_n(x) = n E_(n-1)(x)`` (second kind, order 1), and the Hermite-based
    analogue at order 1 for every ``j`` in ``j_set``."""
    _check_bounds(n_max=n_max)
    js = _check_j_set(j_set)
    report = IdentityReport(IdentityId.SKG_EULER_RATIO)
    with _timed(report):
        skg, ske = _skg_table(n_max), _ske_table(n_max)
        for n in range(1, n_max + 1):
            report.parameter_grid.append((n, None, 1, None))
            report.compare({"n": n}, skg[n], poly_scale(ske[n - 1], n))
        for j in js:
            hg, he = _hg_table(n_max, j, 1), _he_table(n_max, j, 1)
            for n in range(1, n_max + 1):
                report.parameter_grid.append((n, j, 1, None))
                report.compare({"n": n, "j": j, "a": 1}, hg[n], poly_scale(he[n - 1], n))
    return report


# ---------------------------------------------------------------------------
# Addition formulas in x and x1

LEMMA1_READINGS = {
    "second-kind": (Kernel.SECOND_KIND_GENOCCHI, Kernel.SECOND_KIND_EULER),
    "classical": (Kernel.CLASSICAL_GENOCCHI, Kernel.CLASSICAL_EULER),
}


def _readings(kernels: Iterable[str]) -> list[str]:
    out = list(kernels)
    unknown = [k for k in out if k not in LEMMA1_READINGS]
    if unknown:
        raise ValueError(f"unknown kernel reading(s) {unknown}; expected {sorted(LEMMA1_READINGS)}")
    return out


def check_lemma1_addition(
    n_max: int, alpha_max: int, beta_max: int, kernels: Iterable[str] = ("second-kind", "classical")
) -> IdentityReport:
    """``G_n^(α+β)(x + x1) = sum_k C(n,k) G_k^(α)(x) G_(n-k)^(β)(x1)``."""
    _check_bounds(n_max=n_max, alpha_max=alpha_max, beta_max=beta_max)
    readings = _readings(kernels)
    report = IdentityReport(IdentityId.LEMMA1_ADDITION)
    report.notes.append("kernel readings: " + ", ".join(readings))
    with _timed(report):
        for a in range(alpha_max + 1):
            for b in range(beta_max + 1):
                for n in range(n_max + 1):
                    report.parameter_grid.append((n, None, a, b))
        for reading in readings:
            kernel = LEMMA1_READINGS[reading][0]
            tables = [_kernel_table(kernel, n_max, s, True) for s in range(alpha_max + beta_max + 1)]
            shifted = [[_as_x1(p) for p in t] for t in tables]
            for a in range(alpha_max + 1):
                for b in range(beta_max + 1):
                    for n in range(n_max + 1):
                        lhs = poly_substitute(tables[a + b][n], X + Y, Y)
                        rhs = _binomial_convolution(n, tables[a], shifted[b])
                        report.compare({"n": n, "alpha": a, "beta": b, "kernel": reading}, lhs, rhs)
    return report


def check_lemma1_euler_conv(
    n_max: int, alpha_max: int, kernels: Iterable[str] = ("second-kind", "classical")
) -> IdentityReport:
    """``sum_k C(n,k) E_k^(α) G_(n-k)^(α)(x+x1) = sum_k C(n,k) E_k^(α)(x) G_(n-k)^(α)(x1)``."""
    _check_bounds(n_max=n_max, alpha_max=alpha_max)
    readings = _readings(kernels)
    report = IdentityReport(IdentityId.LEMMA1_EULER_CONV)
    report.notes.append("kernel readings: " + ", ".join(readings))
    with _timed(report):
        for a in range(alpha_max + 1):
            for n in range(n_max + 1):
                report.parameter_grid.append((n, None, a, None))
        for reading in readings:
            g_kernel, e_kernel = LEMMA1_READINGS[reading]
            for a in range(alpha_max + 1):
                e_numbers = _kernel_table(e_kernel, n_max, a, False)
                e_polys = _kernel_table(e_kernel, n_max, a, True)
                g_polys = _kernel_table(g_kernel, n_max, a, True)
                g_sum = [poly_substitute(p, X + Y, Y) for p in g_polys]
                g_x1 = [_as_x1(p) for p in g_polys]
                for n in range(n_max + 1):
                    lhs = _binomial_convolution(n, e_numbers, g_sum)
                    rhs = _binomial_convolution(n, e_polys, g_x1)
                    report.compare({"n": n, "alpha": a, "kernel": reading}, lhs, rhs)
    return report


# ---------------------------------------------------------------------------
# Hermite-based family


def check_hg_euler_quotient(n_max: int, j_set: Iterable[int], a_max: int) -> IdentityReport:
    """Hermite-based Euler polynomial ``E_(n-1)`` equals Hermite-based Genocchi ``G_n / n``.

    Enforced at order ``a = 1``; other orders are run observationally and
    only the first mismatching ``n`` per ``(j, a)`` is recorded.
    """
    _check_bounds(n_max=n_max, a_max=a_max)
    js = _check_j_set(j_set)
    report = IdentityReport(IdentityId.HG_EULER_QUOTIENT)
    report.notes.append("enforced at a=1; other orders observational (kernel carries t^a, not t)")
    with _timed(report):
        for j in js:
            for a in sorted({1, *range(a_max + 1)}):
                hg, he = _hg_table(n_max, j, a), _he_table(n_max, j, a)
                for n in range(1, n_max + 1):
                    report.parameter_grid.append((n, j, a, None))
                    params = {"n": n, "j": j, "a": a}
                    lhs, rhs = poly_scale(he[n - 1], n), hg[n]
                    if a == 1:
                        report.compare(params, lhs, rhs)
                    elif lhs != rhs:
                        report.observe({**params, "first_failing_n": n}, lhs, rhs)
                        break
    return report


def check_derivative(n_max: int, j_set: Iterable[int], a_max: int) -> IdentityReport:
    """``d/dx HG_n^(j,a)(x,y) = n HG_(n-1)^(j,a)(x,y)``."""
    _check_bounds(n_max=n_max, a_max=a_max)
    js = _check_j_set(j_set)
    report = IdentityReport(IdentityId.HG_DERIVATIVE)
    with _timed(report):
        for j in js:
            for a in range(a_max + 1):
                hg = _hg_table(n_max, j, a)
                for n in range(1, n_max + 1):
                    report.parameter_grid.append((n, j, a, None))
                    report.compare({"n": n, "j": j, "a": a}, poly_partial(hg[n], "x", 1), poly_scale(hg[n - 1], n))
    return report


def check_thm1_floor_sum(n_max: int) -> IdentityReport:
    """``HG_n^(2,1)(x,y) = n! sum_l y^l G_(n-2l)(x) / (l! (n-2l)!)``."""
    _check_bounds(n_max=n_max)
    report = IdentityReport(IdentityId.THM1_FLOOR_SUM)
    with _timed(report):
        hg = _hg_table(n_max, 2, 1)
        skg = _skg_table(n_max)
        for n in range(n_max + 1):
            report.parameter_grid.append((n, 2, 1, None))
            report.compare({"n": n}, hg[n], thm1_floor_sum(n, skg))
    return report


def thm1_floor_sum(n: int, skg: list[BivarPoly]) -> BivarPoly:
    out = ZERO
    for l in range(n // 2 + 1):
        c = Fraction(factorial(n), factorial(l) * factorial(n - 2 * l))
        out = poly_add(out, poly_scale(poly_mul(BivarPoly.monomial(0, l), skg[n - 2 * l]), c))
    return out


def check_thm3_convolution(n_max: int, a_max: int) -> IdentityReport:
    """``HG_n^(2,a)(x,y) = sum_l C(n,l) G_(n-l)^(a) H_l^(2)(x,y)`` with order-a numbers."""
    _check_bounds(n_max=n_max, a_max=a_max)
    report = IdentityReport(IdentityId.THM3_CONVOLUTION)
    with _timed(report):
        gh = _gh_table(n_max, 2)
        for a in range(a_max + 1):
            hg = _hg_table(n_max, 2, a)
            numbers = _skg_table(n_max, a, symbolic=False)
            for n in range(n_max + 1):
                report.parameter_grid.append((n, 2, a, None))
                report.compare({"n": n, "a": a}, hg[n], _binomial_convolution(n, numbers, gh))
    return report


def grid_points(count: int) -> list[Fraction]:
    """``count`` distinct rationals: 0, 1, -1, 1/2, -2/3, then 2, -2, 3, -3, ..."""
    base = [Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-2, 3)]
    pts = base[:count]
    k = 2
    while len(pts) < count:
        pts.append(Fraction(k))
        if len(pts) < count:
            pts.append(Fraction(-k))
        k += 1
    return pts


def check_thm2_addition(
    n_max: int, j_set: Iterable[int], a_max: int, b_max: int, method: str = "taylor"
) -> IdentityReport:
    """``HG_n^(j,a+b)(x1+x2, y1+y2) = sum_k C(n,k) HG_k^(j,a)(x1,y1) HG_(n-k)^(j,b)(x2,y2)``.

    Both sides are polynomials in four symbols.  ``(x1, y1)`` stay symbolic
    as ``(x, y)``; ``(x2, y2)`` are eliminated either by comparing the
    coefficients of every ``x2^r y2^s`` with ``r + j*s <= n`` (``"taylor"``,
    left side via partial derivatives), or by substituting a tensor grid of
    ``n + 1`` by ``n // j + 1`` rational points (``"grid"``).  Either way the
    comparison is exact and equivalent to the four-symbol identity.
    """
    _check_bounds(n_max=n_max, a_max=a_max, b_max=b_max)
    js = _check_j_set(j_set)
    if method not in ("taylor", "grid"):
        raise ValueError(f"unknown method {method!r}")
    report = IdentityReport(IdentityId.THM2_ADDITION)
    report.notes.append(f"method: {method}")
    report.notes.append("right side summed with index k on the first factor (the printed form repeats n)")
    with _timed(report):
        for j in js:
            tables = {s: _hg_table(n_max, j, s) for s in range(a_max + b_max + 1)}
            for a in range(a_max + 1):
                for b in range(b_max + 1):
                    for n in range(n_max + 1):
                        report.parameter_grid.append((n, j, a, b))
                        params = {"n": n, "j": j, "a": a, "b": b}
                        if method == "taylor":
                            _thm2_taylor(report, params, tables[a + b][n], tables[a], tables[b])
                        else:
                            _thm2_grid(report, params, tables[a + b][n], tables[a], tables[b])
                        _thm2_printed(report, params, tables[a + b][n], tables[a], tables[b])
    return report


def _thm2_taylor(report, params, lhs_poly, left, right) -> None:
    n, j = params["n"], params["j"]
    pairs = [(r, s) for r in range(n + 1) for s in range((n - r) // j + 1)]
    # every monomial x2^r y2^s of either side has weighted degree r + j*s <= n
    assert len(pairs) == sum((n - r) // j + 1 for r in range(n + 1))
    dx = lhs_poly
    for r in range(n + 1):
        dxy = dx
        for s in range((n - r) // j + 1):
            lhs = poly_scale(dxy, Fraction(1, factorial(r) * factorial(s)))
            rhs = ZERO
            for k in range(n - r - j * s + 1):
                c = right[n - k].coeff(r, s)
                if c and left[k]:
                    rhs = poly_add(rhs, poly_scale(left[k], comb(n, k) * c))
            report.compare({**params, "x2^": r, "y2^": s}, lhs, rhs)
            dxy = poly_partial(dxy, "y", 1)
        dx = poly_partial(dx, "x", 1)


def _thm2_grid(report, params, lhs_poly, left, right) -> None:
    n, j = params["n"], params["j"]
    xs, ys = grid_points(n + 1), grid_points(n // j + 1)
    # degree in x2 is at most n, in y2 at most n // j
    assert len(set(xs)) > n and len(set(ys)) > n // j
    for c in xs:
        for d in ys:
            lhs = poly_substitute(lhs_poly, X + c, Y + d)
            values = [right[m].evaluate(c, d) for m in range(n + 1)]
            rhs = ZERO
            for k in range(n + 1):
                if values[n - k] and left[k]:
                    rhs = poly_add(rhs, poly_scale(left[k], comb(n, k) * values[n - k]))
            report.compare({**params, "x2": str(c), "y2": str(d)}, lhs, rhs)


def _thm2_printed(report, params, lhs_poly, left, right) -> None:
    # printed right side (first factor indexed by n), compared at x2 = y2 = 0;
    # only the first disagreement is kept
    if any(o.params.get("form") == "printed" for o in report.observations):
        return
    n = params["n"]
    rhs = ZERO
    for k in range(n + 1):
        c = right[n - k].constant_term()
        if c and left[n]:
            rhs = poly_add(rhs, poly_scale(left[n], comb(n, k) * c))
    report.observe({**params, "form": "printed", "x2": "0", "y2": "0"}, lhs_poly, rhs)


# ---------------------------------------------------------------------------
# Gould-Hopper heat equation


def check_heat_equation(n_max: int, j_set: Iterable[int]) -> IdentityReport:
    """``dF/dy = d^jF/dx^j`` and ``F(x, 0) = x^n`` for ``F = H_n^(j)``.

    The observations carry every ``(n, j)`` at which the form
    ``dF/dx = d^jF/dx^j`` fails.
    """
    _check_bounds(n_max=n_max)
    js = _check_j_set(j_set)
    report = IdentityReport(IdentityId.HEAT_EQUATION)
    report.notes.append("enforced: dF/dy = d^jF/dx^j; observed: dF/dx = d^jF/dx^j")
    with _timed(report):
        for j in js:
            gh = _gh_table(n_max, j)
            for n in range(n_max + 1):
                report.parameter_grid.append((n, j, None, None))
                f = gh[n]
                dxj = poly_partial(f, "x", j)
                report.compare({"n": n, "j": j, "equation": "dF/dy"}, poly_partial(f, "y", 1), dxj)
                report.compare({"n": n, "j": j, "equation": "F(x,0)"}, poly_substitute(f, X, 0), BivarPoly.monomial(n))
                report.observe({"n": n, "j": j, "equation": "dF/dx"}, poly_partial(f, "x", 1), dxj)
    return report


def check_printed_heat_equation(n_max: int, j_set: Iterable[int]) -> IdentityReport:
    """``dF/dx = d^jF/dx^j`` as an observational report; its failures are the counterexamples."""
    _check_bounds(n_max=n_max)
    js = _check_j_set(j_set)
    report = IdentityReport(IdentityId.HEAT_EQUATION, observational=True)
    report.notes.append("printed form dF/dx = d^jF/dx^j")
    with _timed(report):
        for j in js:
            gh = _gh_table(n_max, j)
            for n in range(n_max + 1):
                report.parameter_grid.append((n, j, None, None))
                f = gh[n]
                report.compare({"n": n, "j": j}, poly_partial(f, "x", 1), poly_partial(f, "x", j))
    return report


# ---------------------------------------------------------------------------
# Driver


@dataclass(frozen=True)
class VerifierConfig:
    n_max: int = 24
    a_max: int = 3
    b_max: int = 3
    j_set: tuple[int, ...] = (2, 3)
    identities: tuple[IdentityId, ...] | None = None
    observational: frozenset[IdentityId] = frozenset()
    kernels: tuple[str, ...] = ("second-kind", "classical")
    thm2_method: str = "taylor"
    jobs: int = 1

    def __post_init__(self):
        _check_bounds(n_max=self.n_max, a_max=self.a_max, b_max=self.b_max)
        _check_j_set(self.j_set)
        _readings(self.kernels)
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    def selected(self) -> list[IdentityId]:
        wanted = set(IdentityId) if self.identities is None else set(self.identities)
        return [i for i in IdentityId if i in wanted]


_DISPATCH: dict[IdentityId, Callable[[VerifierConfig], IdentityReport]] = {
    IdentityId.GENO_BINOM: lambda c: check_geno_binom(c.n_max),
    IdentityId.SKG_BINOM: lambda c: check_skg_binom(c.n_max),
    IdentityId.SKG_RESCALE: lambda c: check_rescale(c.n_max),
    IdentityId.SKG_TRIPLE_MULTINOMIAL: lambda c: check_triple_multinomial(c.n_max),
    IdentityId.SKG_EULER_RATIO: lambda c: check_euler_ratio(c.n_max, c.j_set),
    IdentityId.LEMMA1_ADDITION: lambda c: check_lemma1_addition(c.n_max, c.a_max, c.b_max, c.kernels),
    IdentityId.LEMMA1_EULER_CONV: lambda c: check_lemma1_euler_conv(c.n_max, c.a_max, c.kernels),
    IdentityId.HG_EULER_QUOTIENT: lambda c: check_hg_euler_quotient(c.n_max, c.j_set, c.a_max),
    IdentityId.HG_DERIVATIVE: lambda c: check_derivative(c.n_max, c.j_set, c.a_max),
    IdentityId.THM1_FLOOR_SUM: lambda c: check_thm1_floor_sum(c.n_max),
    IdentityId.THM2_ADDITION: lambda c: check_thm2_addition(c.n_max, c.j_set, c.a_max, c.b_max, c.thm2_method),
    IdentityId.THM3_CONVOLUTION: lambda c: check_thm3_convolution(c.n_max, c.a_max),
    IdentityId.HEAT_EQUATION: lambda c: check_heat_equation(c.n_max, c.j_set),
}

assert set(_DISPATCH) == set(IdentityId)


def run_identity(identity: IdentityId, config: VerifierConfig) -> IdentityReport:
    report = _DISPATCH[identity](config)
    if identity in config.observational:
        report.observational = True
    return report


def run_all(config: VerifierConfig = VerifierConfig()) -> list[IdentityReport]:
    """Run the selected checks; reports come back in :class:`IdentityId` order."""
    ids = config.selected()
    if config.jobs == 1 or len(ids) <= 1:
        return [run_identity(i, config) for i in ids]
    with ProcessPoolExecutor(max_workers=config.jobs) as pool:
        return list(pool.map(run_identity, ids, [config] * len(ids)))
