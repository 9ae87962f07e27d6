"""Exact scalars, polynomials and dense matrices over the rationals.

Scalars are :class:`fractions.Fraction` (always reduced, positive
denominator).  Nothing in here ever touches a float.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; ints and Fractions pass straight through."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"not a rational: {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial, coefficients lowest degree first."""

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        # zero polynomial gets -1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "x" if d == 1 else f"x^{d}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_from_roots(roots: Iterable) -> Polynomial:
    """Monic polynomial prod(x - r) over the given multiset of roots."""
    coeffs = [Fraction(1)]
    for r in roots:
        r = Fraction(r)
        # multiply by (x - r) in place
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= r * c
        coeffs = nxt
    return Polynomial(tuple(coeffs))


@dataclass(frozen=True)
class RationalMatrix:
    """Dense square matrix of Fractions, stored row-major."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix order must be positive")
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def zeros(cls, n):
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence):
        n = len(values)
        return cls(tuple(tuple(values[i] if i == j else 0 for j in range(n))
                         for i in range(n)))

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, idx):
        i, j = idx
        n = self.order
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"entry ({i}, {j}) outside a {n}x{n} matrix")
        return self.rows[i][j]

    def diag(self) -> tuple:
        return tuple(self.rows[i][i] for i in range(self.order))

    def trace(self) -> Fraction:
        return sum(self.diag(), Fraction(0))

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        n = self.order
        if other.order != n:
            raise ValueError("order mismatch")
        cols = list(zip(*other.rows))
        return RationalMatrix(tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols)
            for row in self.rows))


def block_diag(*blocks: RationalMatrix) -> RationalMatrix:
    n = sum(b.order for b in blocks)
    rows = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.order):
            for j in range(b.order):
                rows[off + i][off + j] = b.rows[i][j]
        off += b.order
    return RationalMatrix(tuple(tuple(r) for r in rows))


def common_denominator(values: Iterable) -> int:
    d = 1
    for x in values:
        d = math.lcm(d, Fraction(x).denominator)
    return d


def char_poly(m: RationalMatrix) -> Polynomial:
    """det(xI - m), exactly.

    The matrix is scaled by the lcm D of its denominators to an integer
    matrix B = D m, whose characteristic polynomial Faddeev-LeVerrier
    computes with exact integer division; then coeff_i(m) = coeff_i(B) / D^(n-i).
    """
    n = m.order
    d = common_denominator(x for row in m.rows for x in row)
    b = [[int(x * d) for x in row] for row in m.rows]
    coeffs = _faddeev_leverrier_int(b)
    return Polynomial(tuple(Fraction(c, d ** (n - i)) for i, c in enumerate(coeffs)))


def _faddeev_leverrier_int(a):
    n = len(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    # M_k = A M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(A M_k) / k
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        mk = _matmul(a, mk)
        for i in range(n):
            mk[i][i] += coeffs[n - k + 1]
        tr = sum(sum(a[i][j] * mk[j][i] for j in range(n)) for i in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[n - k] = q
    return coeffs


def _matmul(a, b):
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def is_nonnegative(m: RationalMatrix) -> bool:
    return all(x >= 0 for row in m.rows for x in row)
