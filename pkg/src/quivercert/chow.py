"""Exact model of the Chow ring of the moduli space Y and
Hirzebruch-Riemann-Roch Euler characteristics.

Y is the moduli space of stable 3-Kronecker representations of
dimension vector (2,3), a smooth Fano sixfold.  Its rational Chow ring
is free of total rank 13 with generators c_i = c_i(U2*) and
d_i = c_i(U1*), subject to c_1 = d_1 and one relation table per degree;
the point class is c3^2.

Every monomial in c1, c2, c3, d2 of degree at most 6 reduces to basis
coordinates through a precomputed table, so multiplication is table
lookup plus bilinearity.  Chern characters of bundle expressions are
evaluated compositionally from the definitional Chern classes of the
universal bundles via Newton's identities, and chi(F) is the degree-6
integral of ch(F) * Todd(Y).  All coefficients are exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .bundles import BundleExpr

F = Fraction


def render_fraction(x: Fraction | int):
    """Canonical exact rendering: ints stay ints, proper fractions
    become the string "p/q"."""
    x = Fraction(x)
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"

#: Basis labels in order, grouped by codimension 0..6.
BASIS = (
    "[Y]",
    "c1",
    "c1^2", "c2", "d2",
    "c1*c2", "c1*d2", "c3",
    "c2^2", "c2*d2", "d2^2",
    "c2*c3",
    "c3^2",
)

DEGREES = (0, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 6)

_INDEX = {label: i for i, label in enumerate(BASIS)}

# Exponent vectors (a, b, e, f) for c1^a c2^b d2^e c3^f.
_BASIS_MONOMIALS = (
    (0, 0, 0, 0),
    (1, 0, 0, 0),
    (2, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0),
    (1, 1, 0, 0), (1, 0, 1, 0), (0, 0, 0, 1),
    (0, 2, 0, 0), (0, 1, 1, 0), (0, 0, 2, 0),
    (0, 1, 0, 1),
    (0, 0, 0, 2),
)


def _monomial_degree(m) -> int:
    a, b, e, f = m
    return a + 2 * b + 2 * e + 3 * f


# Reductions of non-basis monomials into basis coordinates.
_EXTRA_REDUCTIONS: dict[tuple[int, int, int, int], dict[str, Fraction]] = {
    # degree 3
    (3, 0, 0, 0): {"c1*d2": F(4), "c3": F(-3)},
    # degree 4
    (4, 0, 0, 0): {"c2^2": F(-3), "c2*d2": F(9), "d2^2": F(3)},
    (2, 1, 0, 0): {"c2*d2": F(1), "d2^2": F(3)},
    (2, 0, 1, 0): {"d2^2": F(3)},
    (1, 0, 0, 1): {"c2^2": F(1), "c2*d2": F(-3), "d2^2": F(3)},
    # degree 5, all proportional to c2*c3
    (5, 0, 0, 0): {"c2*c3": F(19)},
    (3, 1, 0, 0): {"c2*c3": F(9)},
    (3, 0, 1, 0): {"c2*c3": F(6)},
    (2, 0, 0, 1): {"c2*c3": F(5, 3)},
    (1, 2, 0, 0): {"c2*c3": F(14, 3)},
    (1, 1, 1, 0): {"c2*c3": F(3)},
    (1, 0, 2, 0): {"c2*c3": F(2)},
    (0, 0, 1, 1): {"c2*c3": F(2, 3)},
    # degree 6, all proportional to the point class c3^2
    (6, 0, 0, 0): {"c3^2": F(57)},
    (4, 1, 0, 0): {"c3^2": F(27)},
    (4, 0, 1, 0): {"c3^2": F(18)},
    (3, 0, 0, 1): {"c3^2": F(5)},
    (2, 2, 0, 0): {"c3^2": F(14)},
    (2, 1, 1, 0): {"c3^2": F(9)},
    (2, 0, 2, 0): {"c3^2": F(6)},
    (1, 1, 0, 1): {"c3^2": F(3)},
    (1, 0, 1, 1): {"c3^2": F(2)},
    (0, 3, 0, 0): {"c3^2": F(9)},
    (0, 2, 1, 0): {"c3^2": F(5)},
    (0, 1, 2, 0): {"c3^2": F(3)},
    (0, 0, 3, 0): {"c3^2": F(2)},
}


def _build_monomial_table():
    table = {}
    for i, mono in enumerate(_BASIS_MONOMIALS):
        coords = [F(0)] * len(BASIS)
        coords[i] = F(1)
        table[mono] = tuple(coords)
    for mono, data in _EXTRA_REDUCTIONS.items():
        coords = [F(0)] * len(BASIS)
        for label, coeff in data.items():
            coords[_INDEX[label]] = F(coeff)
        table[mono] = tuple(coords)
    # every monomial of degree <= 6 must be covered
    for a in range(7):
        for b in range(4):
            for e in range(4):
                for f in range(3):
                    m = (a, b, e, f)
                    if _monomial_degree(m) <= 6 and m not in table:
                        raise AssertionError(f"monomial {m} missing from reduction table")
    return table


_MONOMIAL_COORDS = _build_monomial_table()


def _build_product_table():
    """coords of basis_i * basis_j, indexed [i][j]."""
    n = len(BASIS)
    zero = tuple([F(0)] * n)
    table = [[zero] * n for _ in range(n)]
    for i, mi in enumerate(_BASIS_MONOMIALS):
        for j, mj in enumerate(_BASIS_MONOMIALS):
            m = tuple(x + y for x, y in zip(mi, mj))
            if _monomial_degree(m) <= 6:
                table[i][j] = _MONOMIAL_COORDS[m]
    return table


_PRODUCTS = _build_product_table()


class ChowElement:
    """An element of the Chow ring, stored as exact rational coordinates
    over the 13-class basis."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(F(x) for x in coords)
        if len(coords) != len(BASIS):
            raise ValueError("expected one coordinate per basis class")
        self.coords = coords

    @classmethod
    def zero(cls) -> "ChowElement":
        return cls([0] * len(BASIS))

    @classmethod
    def unit(cls) -> "ChowElement":
        return cls([1] + [0] * (len(BASIS) - 1))

    @classmethod
    def basis(cls, label: str) -> "ChowElement":
        coords = [F(0)] * len(BASIS)
        coords[_INDEX[label]] = F(1)
        return cls(coords)

    def coefficient(self, label: str) -> Fraction:
        return self.coords[_INDEX[label]]

    def degree_part(self, k: int) -> "ChowElement":
        return ChowElement(
            [c if DEGREES[i] == k else F(0) for i, c in enumerate(self.coords)]
        )

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other):
        if not isinstance(other, ChowElement):
            return NotImplemented
        return ChowElement([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        if not isinstance(other, ChowElement):
            return NotImplemented
        return ChowElement([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return ChowElement([-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ChowElement([a * other for a in self.coords])
        if not isinstance(other, ChowElement):
            return NotImplemented
        out = [F(0)] * len(BASIS)
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                if b == 0:
                    continue
                prod = _PRODUCTS[i][j]
                ab = a * b
                for k, c in enumerate(prod):
                    if c != 0:
                        out[k] += ab * c
        return ChowElement(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = ChowElement.unit()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, ChowElement) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        terms = [
            f"{c}*{BASIS[i]}" for i, c in enumerate(self.coords) if c != 0
        ]
        return " + ".join(terms) if terms else "0"

    def to_json_dict(self) -> dict:
        return {label: render_fraction(c) for label, c in zip(BASIS, self.coords)}


def chow_mul(x: ChowElement, y: ChowElement) -> ChowElement:
    return x * y


def integral(x: ChowElement) -> Fraction:
    """Degree-6 integral: the coefficient of the point class c3^2."""
    return x.coefficient("c3^2")


_C1 = ChowElement.basis("c1")
_C2 = ChowElement.basis("c2")
_C3 = ChowElement.basis("c3")
_D2 = ChowElement.basis("d2")


def _from_parts(*parts: ChowElement) -> ChowElement:
    out = ChowElement.zero()
    for p in parts:
        out = out + p
    return out


@lru_cache(maxsize=1)
def tangent_chern() -> ChowElement:
    """Total Chern class of the tangent bundle, graded pieces in basis
    coordinates."""
    return _from_parts(
        ChowElement.unit(),
        3 * _C1,
        3 * ChowElement.basis("c1^2") + 5 * _D2,
        16 * ChowElement.basis("c1*d2") - 9 * _C3,
        -9 * ChowElement.basis("c2^2") + 27 * ChowElement.basis("c2*d2")
        + 4 * ChowElement.basis("d2^2"),
        17 * ChowElement.basis("c2*c3"),
        13 * ChowElement.basis("c3^2"),
    )


@lru_cache(maxsize=1)
def todd_y() -> ChowElement:
    """Todd class of Y; the degree-3 piece is stated with c1^3 already
    reduced to basis coordinates."""
    return _from_parts(
        ChowElement.unit(),
        F(3, 2) * _C1,
        ChowElement.basis("c1^2") + F(5, 12) * _D2,
        F(17, 8) * ChowElement.basis("c1*d2") - F(9, 8) * _C3,
        -F(1, 4) * ChowElement.basis("c2^2") + F(3, 4) * ChowElement.basis("c2*d2")
        + F(553, 360) * ChowElement.basis("d2^2"),
        F(77, 60) * ChowElement.basis("c2*c3"),
        ChowElement.basis("c3^2"),
    )


def _exp(x: ChowElement) -> ChowElement:
    """exp of an element with zero degree-0 part, truncated in degree 6."""
    if not x.degree_part(0).is_zero():
        raise ValueError("exp needs vanishing degree-0 part")
    out = ChowElement.unit()
    power = ChowElement.unit()
    for k in range(1, 7):
        power = power * x
        if power.is_zero():
            break
        out = out + F(1, factorial(k)) * power
    return out


def _psi2(x: ChowElement) -> ChowElement:
    """Second Adams operation on Chern characters: scale the degree-k
    part by 2^k."""
    return ChowElement([c * (2 ** DEGREES[i]) for i, c in enumerate(x.coords)])


def _dual_ch(x: ChowElement) -> ChowElement:
    """Chern character of the dual: negate odd-degree parts."""
    return ChowElement(
        [-c if DEGREES[i] % 2 else c for i, c in enumerate(x.coords)]
    )


def _ch_from_chern(rank: int, chern: tuple[ChowElement, ...]) -> ChowElement:
    """Chern character from Chern classes via Newton's identities on
    power sums of the Chern roots."""
    e = list(chern)
    p: list[ChowElement] = []
    for k in range(1, 7):
        term = ChowElement.zero()
        for i in range(1, min(k, len(e)) + 1):
            sign = -1 if i % 2 == 0 else 1
            if i == k:
                term = term + sign * k * e[i - 1]
            else:
                term = term + sign * (e[i - 1] * p[k - i - 1])
        p.append(term)
    out = rank * ChowElement.unit()
    for k, pk in enumerate(p, start=1):
        out = out + F(1, factorial(k)) * pk
    return out


@lru_cache(maxsize=1)
def _ch_u2_star() -> ChowElement:
    return _ch_from_chern(3, (_C1, _C2, _C3))


@lru_cache(maxsize=1)
def _ch_u1_star() -> ChowElement:
    return _ch_from_chern(2, (_C1, _D2))


@lru_cache(maxsize=None)
def ch_of(e: BundleExpr) -> ChowElement:
    """Chern character of a bundle expression, evaluated compositionally."""
    if e.op == "U1":
        return _dual_ch(_ch_u1_star())
    if e.op == "U2":
        return _dual_ch(_ch_u2_star())
    if e.op == "O":
        return _exp(e.args[0] * _C1)
    if e.op == "dual":
        return _dual_ch(ch_of(e.args[0]))
    if e.op == "tensor":
        return ch_of(e.args[0]) * ch_of(e.args[1])
    if e.op == "sum":
        return ch_of(e.args[0]) + ch_of(e.args[1])
    if e.op == "det":
        return _exp(ch_of(e.args[0]).degree_part(1))
    if e.op == "sl":
        inner = ch_of(e.args[0])
        return inner * _dual_ch(inner) - ChowElement.unit()
    if e.op == "sym2":
        inner = ch_of(e.args[0])
        return F(1, 2) * (inner * inner + _psi2(inner))
    if e.op == "wedge2":
        inner = ch_of(e.args[0])
        return F(1, 2) * (inner * inner - _psi2(inner))
    raise ValueError(f"unknown operator {e.op!r}")


class RingInconsistencyError(ArithmeticError):
    """A Riemann-Roch integral that must be an integer failed to be one."""


def chi(e: BundleExpr) -> int:
    """Euler characteristic chi(Y, e) = integral of ch(e) * Todd(Y)."""
    value = integral(ch_of(e) * todd_y())
    if value.denominator != 1:
        raise RingInconsistencyError(
            f"ring inconsistency: chi({e}) = {value} is not an integer"
        )
    return int(value)


# -- polynomial input for the command line ------------------------------------

class ChowSyntaxError(ValueError):
    pass


class _PolyParser:
    """Integer-coefficient polynomials in c1, c2, c3, d1, d2 with + - * ^
    and parentheses; d1 is identified with c1 on input."""

    _ATOMS = {
        "c1": _C1,
        "c2": _C2,
        "c3": _C3,
        "d1": _C1,
        "d2": _D2,
    }

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, message):
        raise ChowSyntaxError(f"{message} (at position {self.pos})")

    def parse(self) -> ChowElement:
        out = self.sum_expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.fail("trailing input")
        return out

    def sum_expr(self) -> ChowElement:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.peek() == "-":
                sign = -sign
            self.pos += 1
        out = sign * self.term()
        while self.peek() in ("+", "-"):
            sign = 1
            while self.peek() in ("+", "-"):
                if self.peek() == "-":
                    sign = -sign
                self.pos += 1
            out = out + sign * self.term()
        return out

    def term(self) -> ChowElement:
        out = self.power()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                out = out * self.power()
            elif ch.isalnum() or ch == "(":
                # implicit multiplication, e.g. "3c1" or "c1c2"
                out = out * self.power()
            else:
                return out

    def power(self) -> ChowElement:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                self.fail("expected exponent")
            return base ** int(self.text[start:self.pos])
        return base

    def atom(self) -> ChowElement:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            out = self.sum_expr()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.pos += 1
            return out
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return int(self.text[start:self.pos]) * ChowElement.unit()
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isalnum():
                name = self.text[start:self.pos + 1]
                self.pos += 1
                if name in self._ATOMS:
                    return self._ATOMS[name]
            self.pos = start
            self.fail("unknown class name")
        self.fail("expected class, number, or '('")


def parse_chow_poly(text: str) -> ChowElement:
    return _PolyParser(text).parse()
