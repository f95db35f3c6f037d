"""Exact rationals and sparse polynomials in two symbols ``x`` and ``y``.

Rationals are :class:`fractions.Fraction` values, which are already kept in
lowest terms with a positive denominator.  :class:`BivarPoly` stores a map
from exponent pairs ``(degx, degy)`` to nonzero coefficients and is
canonicalised on construction, so ``==`` is semantic equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "Rational",
    "ExponentPair",
    "BivarPoly",
    "X",
    "Y",
    "ZERO",
    "ONE",
    "rat_add",
    "rat_mul",
    "rat_neg",
    "rat_inv",
    "parse_rational",
    "format_rational",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "poly_substitute",
    "poly_partial",
]

Rational = Fraction
ExponentPair = tuple[int, int]
Scalar = Union[int, Fraction]


# ---------------------------------------------------------------------------
# Rationals


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(a) + Fraction(b)


def rat_mul(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(a) * Fraction(b)


def rat_neg(a: Fraction) -> Fraction:
    return -Fraction(a)


def rat_inv(a: Fraction) -> Fraction:
    """Multiplicative inverse; raises ``ZeroDivisionError`` on zero."""
    if a == 0:
        raise ZeroDivisionError("division by zero")
    return 1 / Fraction(a)


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer string.

    Also accepts the Unicode minus sign.  Raises ``ValueError`` on anything
    else, including a zero denominator.
    """
    m = _RATIONAL_RE.match(text.replace("−", "-"))
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(a: Fraction) -> str:
    """Canonical ``"p/q"`` form, e.g. ``"-3/2"``, ``"0/1"``, ``"5/1"``."""
    a = Fraction(a)
    return f"{a.numerator}/{a.denominator}"


# ---------------------------------------------------------------------------
# Polynomials


class BivarPoly:
    """Immutable sparse polynomial in ``x`` and ``y`` with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[ExponentPair, Scalar] | Iterable[tuple[ExponentPair, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[ExponentPair, Fraction] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            acc[(i, j)] = acc.get((i, j), 0) + c
        self._terms = {k: Fraction(v) for k, v in acc.items() if v != 0}
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[ExponentPair, Fraction]) -> BivarPoly:
        # Caller guarantees canonical form (no zero coefficients).
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Scalar) -> BivarPoly:
        return cls._raw({(0, 0): Fraction(c)} if c != 0 else {})

    @classmethod
    def monomial(cls, degx: int, degy: int = 0, coeff: Scalar = 1) -> BivarPoly:
        return cls({(degx, degy): coeff})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[ExponentPair, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[ExponentPair, Fraction]]:
        return iter(self._terms.items())

    def coeff(self, degx: int, degy: int = 0) -> Fraction:
        return self._terms.get((degx, degy), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0, 0) in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0), Fraction(0))

    def degree(self, var: str = "x") -> int:
        """Degree in ``var``; ``-1`` for the zero polynomial."""
        idx = _var_index(var)
        return max((k[idx] for k in self._terms), default=-1)

    def sorted_terms(self) -> list[tuple[int, int, Fraction]]:
        """Terms as ``(degx, degy, coeff)`` sorted by ``(degx, degy)`` descending."""
        return [(i, j, c) for (i, j), c in sorted(self._terms.items(), reverse=True)]

    # -- serialization ------------------------------------------------------

    def to_records(self) -> list[dict]:
        return [{"degx": i, "degy": j, "coeff": format_rational(c)} for i, j, c in self.sorted_terms()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> BivarPoly:
        return cls(((int(r["degx"]), int(r["degy"])), parse_rational(str(r["coeff"]))) for r in records)

    def to_triples(self) -> list[list]:
        return [[i, j, format_rational(c)] for i, j, c in self.sorted_terms()]

    @classmethod
    def from_triples(cls, triples: Iterable[Iterable]) -> BivarPoly:
        return cls(((int(i), int(j)), parse_rational(str(c))) for i, j, c in triples)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: BivarPoly | Scalar) -> BivarPoly:
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self) -> BivarPoly:
        return BivarPoly._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: BivarPoly | Scalar) -> BivarPoly:
        return poly_add(self, -_coerce(other))

    def __rsub__(self, other: Scalar) -> BivarPoly:
        return poly_add(_coerce(other), -self)

    def __mul__(self, other: BivarPoly | Scalar) -> BivarPoly:
        if isinstance(other, BivarPoly):
            return poly_mul(self, other)
        return poly_scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BivarPoly:
        if k < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BivarPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == _coerce(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __call__(self, x: Scalar, y: Scalar = 0) -> Fraction:
        return self.evaluate(x, y)

    def evaluate(self, x: Scalar, y: Scalar = 0) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total += c * x**i * y**j
        return total

    def __repr__(self) -> str:
        return f"BivarPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, j, c in self.sorted_terms():
            mono = "*".join(
                s for s in (_power("x", i), _power("y", j)) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}" if c.denominator == 1 else f"({c})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _power(name: str, k: int) -> str:
    if k == 0:
        return ""
    return name if k == 1 else f"{name}^{k}"


def _var_index(var: str) -> int:
    if var == "x":
        return 0
    if var == "y":
        return 1
    raise ValueError(f"unknown variable {var!r}; expected 'x' or 'y'")


def _coerce(p: BivarPoly | Scalar) -> BivarPoly:
    if isinstance(p, BivarPoly):
        return p
    return BivarPoly.constant(p)


X = BivarPoly({(1, 0): 1})
Y = BivarPoly({(0, 1): 1})
ZERO = BivarPoly()
ONE = BivarPoly({(0, 0): 1})


def poly_add(p: BivarPoly, q: BivarPoly) -> BivarPoly:
    if not q._terms:
        return p
    if not p._terms:
        return q
    out = dict(p._terms)
    for k, v in q._terms.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return BivarPoly._raw(out)


def poly_scale(p: BivarPoly, c: Scalar) -> BivarPoly:
    if c == 0:
        return ZERO
    if c == 1:
        return p
    c = Fraction(c)
    return BivarPoly._raw({k: v * c for k, v in p._terms.items()})


def poly_mul(p: BivarPoly, q: BivarPoly) -> BivarPoly:
    """Full product of the two term maps."""
    if not p._terms or not q._terms:
        return ZERO
    if len(p._terms) == 1 and (0, 0) in p._terms:
        return poly_scale(q, p._terms[(0, 0)])
    if len(q._terms) == 1 and (0, 0) in q._terms:
        return poly_scale(p, q._terms[(0, 0)])
    out: dict[ExponentPair, Fraction] = {}
    get = out.get
    for (i1, j1), c1 in p._terms.items():
        for (i2, j2), c2 in q._terms.items():
            k = (i1 + i2, j1 + j2)
            out[k] = get(k, 0) + c1 * c2
    return BivarPoly._raw({k: v for k, v in out.items() if v})


def poly_substitute(p: BivarPoly, x_val: BivarPoly | Scalar, y_val: BivarPoly | Scalar) -> BivarPoly:
    """Simultaneous substitution ``x <- x_val``, ``y <- y_val``."""
    x_val, y_val = _coerce(x_val), _coerce(y_val)
    if not p._terms:
        return ZERO
    max_i = max(i for i, _ in p._terms)
    max_j = max(j for _, j in p._terms)
    xp = _powers(x_val, max_i)
    yp = _powers(y_val, max_j)
    # Group by y-degree so each y-power is multiplied once.
    by_y: dict[int, BivarPoly] = {}
    for (i, j), c in p._terms.items():
        by_y[j] = poly_add(by_y.get(j, ZERO), poly_scale(xp[i], c))
    out = ZERO
    for j, part in by_y.items():
        out = poly_add(out, poly_mul(part, yp[j]))
    return out


def _powers(p: BivarPoly, k: int) -> list[BivarPoly]:
    out = [ONE]
    for _ in range(k):
        out.append(poly_mul(out[-1], p))
    return out


def poly_partial(p: BivarPoly, var: str, times: int = 1) -> BivarPoly:
    """Formal partial derivative with respect to ``var``, applied ``times`` times."""
    if times < 0:
        raise ValueError("times must be >= 0")
    if times == 0:
        return p
    idx = _var_index(var)
    out: dict[ExponentPair, Fraction] = {}
    for k, c in p._terms.items():
        d = k[idx]
        if d < times:
            continue
        # falling factorial d (d-1) ... (d-times+1)
        ff = factorial(d) // factorial(d - times)
        nk = (d - times, k[1]) if idx == 0 else (k[0], d - times)
        out[nk] = c * ff
    return BivarPoly._raw(out)

