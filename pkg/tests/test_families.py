from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
import sympy as sp

from genocchi.algebra import BivarPoly, X, Y, poly_substitute
from genocchi.families import (
    Family,
    FamilySpec,
    Kernel,
    classical_genocchi,
    classical_genocchi_binomial,
    evaluate,
    family_table,
    gould_hopper,
    gould_hopper_closed_form,
    hermite_euler,
    hermite_genocchi,
    kernel_series,
    make_spec,
    second_kind_euler,
    second_kind_genocchi,
    second_kind_genocchi_binomial,
)

from oracles import genocchi_numbers, gould_hopper_brute, second_kind_numbers, sympy_egf, t, to_sympy, x, y

# Genocchi numbers G_2, G_4, ..., G_24 (OEIS A001469; reproduced by the naive
# series-inversion oracle in tests/oracles.py)
GENOCCHI_EVEN = [-1, 1, -3, 17, -155, 2073, -38227, 929569, -28820619, 1109652905, -51943281731, 2905151042481]


def test_oracle_reproduces_frozen_genocchi_numbers():
    g = genocchi_numbers(24)
    assert [g[n] for n in range(2, 25, 2)] == GENOCCHI_EVEN


def test_classical_genocchi_numbers():
    values = [classical_genocchi(n, symbolic=False).value.constant_term() for n in range(9)]
    assert values == [0, 1, -1, 0, 1, 0, -3, 0, 17]
    assert [classical_genocchi(n, symbolic=False).value.constant_term() for n in range(2, 25, 2)] == GENOCCHI_EVEN


def test_classical_genocchi_polynomials():
    assert classical_genocchi(0).value == BivarPoly()
    assert classical_genocchi(2).value == 2 * X - 1


@pytest.mark.parametrize("n", range(0, 9))
def test_classical_genocchi_against_sympy(n):
    expected = sympy_egf(2 * t / (sp.exp(t) + 1) * sp.exp(x * t), n)
    assert sp.expand(to_sympy(classical_genocchi(n).value) - expected) == 0


def test_second_kind_genocchi_numbers():
    values = [second_kind_genocchi(n, symbolic=False).value.constant_term() for n in range(6)]
    assert values == [0, 1, 0, -3, 0, 25]
    assert values == second_kind_numbers(5)


def test_second_kind_genocchi_polynomials():
    assert second_kind_genocchi(2).value == 2 * X
    assert second_kind_genocchi(3).value == 3 * X * X - 3


@pytest.mark.parametrize("a", [0, 1, 2, 3])
def test_higher_order_second_kind_numbers_match_oracle(a):
    values = [c.constant_term() for c in family_table(FamilySpec(Family.SECOND_KIND_GENOCCHI, a=a), 12, symbolic=False)]
    assert values == second_kind_numbers(12, a)
    e_values = [c.constant_term() for c in family_table(FamilySpec(Family.SECOND_KIND_EULER, a=a), 12, symbolic=False)]
    assert e_values == second_kind_numbers(12, a, with_t=False)


@pytest.mark.parametrize("n,a", [(4, 1), (5, 2), (6, 3)])
def test_higher_order_second_kind_against_sympy(n, a):
    kern = 2 * t / (sp.exp(t) + sp.exp(-t))
    expected = sympy_egf(kern**a * sp.exp(x * t), n)
    assert sp.expand(to_sympy(second_kind_genocchi(n, a).value) - expected) == 0


def test_second_kind_euler():
    assert second_kind_euler(0, symbolic=False).value == BivarPoly.constant(1)
    assert second_kind_euler(2, symbolic=False).value == BivarPoly.constant(-1)
    assert [second_kind_euler(n, symbolic=False).value.constant_term() for n in (0, 2, 4)] == [1, -1, 5]
    assert second_kind_euler(2).value == X * X - 1
    for n in range(6):
        assert second_kind_euler(n, a=0).value == BivarPoly.monomial(n)


def test_gould_hopper_examples():
    assert gould_hopper(2, 2).value == X * X + 2 * Y
    assert gould_hopper(3, 2).value == X**3 + 6 * X * Y
    for n in range(8):
        assert poly_substitute(gould_hopper(n, 3).value, X, 0) == BivarPoly.monomial(n)
    with pytest.raises(ValueError):
        gould_hopper(3, 1)


@pytest.mark.parametrize("j", [2, 3, 4])
def test_gould_hopper_against_brute_force(j):
    for n in range(13):
        assert sp.expand(to_sympy(gould_hopper_closed_form(n, j)) - gould_hopper_brute(n, j)) == 0


def test_hermite_genocchi_examples():
    assert hermite_genocchi(2, 2, 1).value == 2 * X
    assert hermite_genocchi(3, 2, 1).value == 3 * X * X + 6 * Y - 3
    for n in range(10):
        assert hermite_genocchi(n, 2, 0).value == gould_hopper(n, 2).value
    # j = 1 is accepted here and collapses to a shift in x
    assert hermite_genocchi(2, 1, 1).value == 2 * X + 2 * Y


def test_hermite_euler_examples():
    assert hermite_euler(0, 2, 1).value == BivarPoly.constant(1)
    assert hermite_euler(1, 2, 1).value == X
    assert hermite_euler(1, 2, 1).value == hermite_genocchi(2, 2, 1).value * Fraction(1, 2)
    for n in range(8):
        assert hermite_euler(n, 3, 0).value == gould_hopper(n, 3).value


def test_hermite_genocchi_against_sympy():
    kern = 2 * t / (sp.exp(t) + sp.exp(-t))
    expected = sympy_egf(kern**2 * sp.exp(x * t + y * t**3), 7)
    assert sp.expand(to_sympy(hermite_genocchi(7, 3, 2).value) - expected) == 0


def test_evaluate():
    assert evaluate(second_kind_genocchi(2), Fraction(1, 2)) == 1
    assert evaluate(gould_hopper(2, 2), 1, 1) == 3
    assert evaluate(classical_genocchi(0), Fraction(7, 3), 5) == 0


@pytest.mark.parametrize("n", range(33))
def test_dual_routes(n):
    assert classical_genocchi(n, cross_check=False).value == classical_genocchi_binomial(n)
    assert second_kind_genocchi(n, cross_check=False).value == second_kind_genocchi_binomial(n)
    for j in (2, 3, 4):
        assert gould_hopper(n, j, cross_check=False).value == gould_hopper_closed_form(n, j)


def test_degrees_and_parity():
    polys = family_table(FamilySpec(Family.SECOND_KIND_GENOCCHI), 20)
    numbers = family_table(FamilySpec(Family.SECOND_KIND_GENOCCHI), 20, symbolic=False)
    for n in range(1, 21):
        assert polys[n].degree("x") == n - 1
        assert polys[n].coeff(n - 1) == n
    for n in range(0, 21, 2):
        assert numbers[n].is_zero()
    for n in range(12):
        assert gould_hopper(n, 2).value.degree("x") == n


def test_order_zero_collapse():
    for family in (Family.SECOND_KIND_GENOCCHI, Family.SECOND_KIND_EULER):
        assert family_table(FamilySpec(family, a=0), 10) == [BivarPoly.monomial(n) for n in range(11)]
    for family in (Family.HERMITE_GENOCCHI, Family.HERMITE_EULER):
        assert family_table(FamilySpec(family, j=3, a=0), 10) == [gould_hopper_closed_form(n, 3) for n in range(11)]


def test_specialization_chain():
    hg = family_table(FamilySpec(Family.HERMITE_GENOCCHI, j=2, a=1), 16)
    skg = family_table(FamilySpec(Family.SECOND_KIND_GENOCCHI), 16)
    for n in range(17):
        assert poly_substitute(hg[n], X, 0) == skg[n]


def test_numbers_path_matches_substitution():
    polys = family_table(FamilySpec(Family.SECOND_KIND_EULER, a=2), 12)
    numbers = family_table(FamilySpec(Family.SECOND_KIND_EULER, a=2), 12, symbolic=False)
    assert [p.constant_term() for p in polys] == [p.constant_term() for p in numbers]


def test_spec_validation():
    with pytest.raises(ValueError):
        FamilySpec(Family.GOULD_HOPPER, j=1)
    with pytest.raises(ValueError):
        FamilySpec(Family.HERMITE_GENOCCHI, j=0)
    with pytest.raises(ValueError):
        FamilySpec(Family.SECOND_KIND_GENOCCHI, a=-1)
    with pytest.raises(ValueError):
        FamilySpec(Family.SECOND_KIND_EULER, j=2)
    assert make_spec("gould-hopper", j=2) == FamilySpec(Family.GOULD_HOPPER, j=2, a=0)
    assert make_spec("hermite-genocchi", j=2).a == 1


def test_kernel_memo_concurrent():
    kernel_series.cache_clear()

    def build(order):
        return kernel_series(Kernel.SECOND_KIND_GENOCCHI, order, 2)

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(build, [12] * 16 + [9] * 16))
    assert all(r == results[0] for r in results[:16])
    assert all(r == results[16] for r in results[16:])
    assert results[0].truncate(9) == results[16]
