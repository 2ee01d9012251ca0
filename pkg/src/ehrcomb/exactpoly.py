"""Exact univariate polynomials over the rationals.

Scalars are :class:`fractions.Fraction`; nothing in here ever touches a float.
A :class:`Polynomial` is an immutable tuple of coefficients in ascending degree
with trailing zeros stripped, so the zero polynomial has no coefficients.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

from .errors import DuplicateNode, NegativeDegree

Scalar = Union[int, Fraction]


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, _RationalABC)):
        return Fraction(v)
    if isinstance(v, str):
        return parse_rational(v)
    raise TypeError(f"expected an exact rational, got {type(v).__name__}")


def rational_str(q) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(q))


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if "." in s or "e" in s.lower():
        raise ValueError(f"not an exact rational literal: {s!r}")
    return Fraction(s)


def _strip(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _strip(_frac(c) for c in coeffs))

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls([c])

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; raises on the zero polynomial, whose degree is -infinity."""
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial is undefined (-inf)")
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x) -> Fraction:
        return poly_eval(self, x)

    def _lift(self, other) -> Polynomial:
        return other if isinstance(other, Polynomial) else Polynomial([other])

    def __add__(self, other) -> Polynomial:
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> Polynomial:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> Polynomial:
        return self._lift(other) - self

    def __mul__(self, other) -> Polynomial:
        other = self._lift(other)
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, c) -> Polynomial:
        c = _frac(c)
        return Polynomial(a / c for a in self.coeffs)

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Polynomial([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{rational_str(abs(c))}*{mono}"
            else:
                body = rational_str(abs(c))
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[str]:
        return [rational_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> Polynomial:
        return cls(_frac(c) for c in data)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def poly_eval(p: Polynomial, x) -> Fraction:
    """Horner evaluation."""
    x = _frac(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def interpolate(points: Sequence[tuple]) -> Polynomial:
    """The unique polynomial of degree < len(points) through ``points``.

    Uses Newton divided differences, then expands to the monomial basis.
    """
    if not points:
        raise ValueError("interpolate needs at least one point")
    xs = [_frac(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DuplicateNode("interpolation nodes must be distinct")
    table = [_frac(y) for _, y in points]
    n = len(xs)
    newton = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(n - level)
        ]
        newton.append(table[0])
    # Horner in the Newton basis
    result = Polynomial([newton[-1]])
    for i in range(n - 2, -1, -1):
        result = result * Polynomial([-xs[i], 1]) + newton[i]
    return result


def interpolate_values(values: Sequence) -> Polynomial:
    """Interpolate ``values[i]`` at the default nodes ``i = 0, 1, ...``."""
    return interpolate(list(enumerate(values)))


def linear_coeff(p: Polynomial) -> Fraction:
    return p.coeff(1)


def shift(p: Polynomial, a) -> Polynomial:
    """Return q with q(x) = p(x + a)."""
    a = _frac(a)
    if a == 0 or p.is_zero:
        return p
    # binomial expansion of each (x + a)^i, accumulated Horner-style
    result = Polynomial()
    step = Polynomial([a, 1])
    for c in reversed(p.coeffs):
        result = result * step + c
    return result


def discrete_sum(p: Polynomial) -> Polynomial:
    """The polynomial q with q(k) = p(0) + p(1) + ... + p(k) for integers k >= 0."""
    deg = -1 if p.is_zero else p.degree
    partial, acc = [], Fraction(0)
    for j in range(deg + 2):
        acc += p(j)
        partial.append(acc)
    return interpolate_values(partial)


def binomial_poly(m, d: int) -> Polynomial:
    """C(x + m, d) as a polynomial in x."""
    out = Polynomial([1])
    m = _frac(m)
    for i in range(d):
        out = out * Polynomial([m - i, 1])
    fact = 1
    for i in range(2, d + 1):
        fact *= i
    return out / fact


def h_complete(n: int, values: Sequence) -> Fraction:
    """Complete homogeneous symmetric polynomial h_n evaluated at ``values``.

    Prefix DP from the product formula prod 1/(1 - v t): after absorbing a value
    v, h_j <- h_j + v * h_{j-1} (in increasing j).
    """
    if n < 0:
        raise NegativeDegree(f"degree must be non-negative, got {n}")
    h = [Fraction(1)] + [Fraction(0)] * n
    for v in values:
        v = _frac(v)
        for j in range(1, n + 1):
            h[j] += v * h[j - 1]
    return h[n]


def e_elementary(n: int, values: Sequence) -> Fraction:
    """Elementary symmetric polynomial e_n evaluated at ``values``."""
    if n < 0:
        raise NegativeDegree(f"degree must be non-negative, got {n}")
    e = [Fraction(1)] + [Fraction(0)] * n
    for v in values:
        v = _frac(v)
        for j in range(n, 0, -1):
            e[j] += v * e[j - 1]
    return e[n]
