"""Dense polynomials with arbitrary-precision integer coefficients.

Exact rationals are plain :class:`fractions.Fraction`; no floating point is
used anywhere in this module.
"""

from __future__ import annotations

import enum
import functools
import math
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .graph import UNDEFINED, Sentinel

Rational = Fraction


class IntPolynomial:
    """Immutable polynomial; ``coeffs[j]`` is the coefficient of ``x**j``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [coeff])

    @classmethod
    def from_mapping(cls, terms: Mapping[int, int]) -> "IntPolynomial":
        if not terms:
            return cls()
        if min(terms) < 0:
            raise ValueError("negative exponent")
        c = [0] * (max(terms) + 1)
        for j, a in terms.items():
            c[j] += a
        return cls(c)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    def coefficient(self, j: int) -> int:
        return self._c[j] if 0 <= j < len(self._c) else 0

    def terms(self) -> dict[int, int]:
        """Non-zero coefficients keyed by exponent, ascending."""
        return {j: a for j, a in enumerate(self._c) if a}

    def is_zero(self) -> bool:
        return not self._c

    @property
    def degree(self) -> int | Sentinel:
        return len(self._c) - 1 if self._c else UNDEFINED

    @property
    def min_degree(self) -> int | Sentinel:
        for j, a in enumerate(self._c):
            if a:
                return j
        return UNDEFINED

    @property
    def nonzero_count(self) -> int:
        return sum(1 for a in self._c if a)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-a for a in self._c)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(a * other for a in self._c)
        if not self._c or not other._c:
            return IntPolynomial()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x: int | Fraction) -> Fraction:
        return evaluate(self, x)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"IntPolynomial({to_text(self)!r})"

    def __str__(self) -> str:
        return to_text(self)


def evaluate(p: IntPolynomial, x: int | Fraction) -> Fraction:
    """Exact Horner evaluation."""
    if isinstance(x, float):
        raise TypeError("evaluation points must be exact (int or Fraction)")
    c = p.coeffs
    if isinstance(x, int):
        acc = 0
        for a in reversed(c):
            acc = acc * x + a
        return Fraction(acc)
    # x = num/den: den^d p(x) is an integer polynomial in num and den
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    acc = 0
    scale = 1
    for a in reversed(c):
        acc = acc * num + a * scale
        scale *= den
    return Fraction(acc, scale // den) if c else Fraction(0)


def derivative(p: IntPolynomial, k: int = 1) -> IntPolynomial:
    """Formal ``k``-th derivative (``k == 0`` returns ``p``)."""
    if k < 0:
        raise ValueError("derivative order must be non-negative")
    if k == 0:
        return p
    c = p.coeffs
    # x^j -> j(j-1)...(j-k+1) x^(j-k)
    return IntPolynomial(c[j] * math.perm(j, k) for j in range(k, len(c)))


def integrate_unit_interval(p: IntPolynomial) -> Fraction:
    """Exact value of the integral of ``p`` over [0, 1]."""
    terms = [(a, j + 1) for j, a in enumerate(p.coeffs) if a]
    common = math.lcm(*(d for _, d in terms)) if terms else 1
    return Fraction(sum(a * (common // d) for a, d in terms), common)


@functools.lru_cache(maxsize=None)
def vieta_q(k: int) -> IntPolynomial:
    """The monic falling-factorial polynomial (x-1)(x-2)...(x-k)."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    q = IntPolynomial([1])
    for i in range(1, k + 1):
        q = q * IntPolynomial([-i, 1])
    return q


def root_multiplicity_at_zero(p: IntPolynomial) -> int | Sentinel:
    """Order of vanishing at x = 0, read from successive derivatives at 0."""
    if p.is_zero():
        return UNDEFINED
    k = 0
    while evaluate(derivative(p, k), 0) == 0:
        k += 1
    return k


def has_nonzero_root(p: IntPolynomial) -> bool:
    """Whether ``p`` vanishes at some complex number other than 0.

    After dividing out the maximal power of x, any non-constant remainder has
    a complex root, and that root cannot be 0.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    mult = root_multiplicity_at_zero(p)
    return len(p.coeffs) - 1 - mult > 0


class PolynomialStructure(NamedTuple):
    degree: int | Sentinel
    min_degree: int | Sentinel
    nonzero_count: int
    leading: int | Sentinel
    trailing: int | Sentinel


def structure(p: IntPolynomial) -> PolynomialStructure:
    if p.is_zero():
        return PolynomialStructure(UNDEFINED, UNDEFINED, 0, UNDEFINED, UNDEFINED)
    return PolynomialStructure(
        p.degree, p.min_degree, p.nonzero_count,
        p.coefficient(p.degree), p.coefficient(p.min_degree),
    )


class Parity(enum.Enum):
    ODD = "odd"
    EVEN = "even"
    NEITHER = "neither"
    ZERO = "zero"


def parity(p: IntPolynomial) -> Parity:
    exps = {j % 2 for j in p.terms()}
    if not exps:
        return Parity.ZERO
    if exps == {1}:
        return Parity.ODD
    if exps == {0}:
        return Parity.EVEN
    return Parity.NEITHER


def to_text(p: IntPolynomial) -> str:
    """Ascending rendering such as ``2x^2 + x^3``."""
    if p.is_zero():
        return "0"
    parts = []
    for j, a in p.terms().items():
        if j == 0:
            body = str(abs(a))
        else:
            mag = "" if abs(a) == 1 else str(abs(a))
            body = f"{mag}x" if j == 1 else f"{mag}x^{j}"
        if not parts:
            parts.append(body if a > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if a > 0 else f"- {body}")
    return " ".join(parts)


def to_json(p: IntPolynomial) -> dict[str, str]:
    return {str(j): str(a) for j, a in p.terms().items()}


def from_json(data: Mapping[str, str]) -> IntPolynomial:
    return IntPolynomial.from_mapping({int(j): int(a) for j, a in data.items()})
