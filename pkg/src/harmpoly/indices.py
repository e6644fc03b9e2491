"""Harmonic polynomial, coefficient profile and degree-based topological indices.

Most indices are evaluated from the coefficient profile ``c_j`` (the number of
edges with ``d_u + d_v - 1 == j``) and cross-checked against a direct sum over
the edges. A disagreement raises :class:`InvariantError`.
"""

from __future__ import annotations

import cmath
import math
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Callable, Iterable, Iterator, Sequence

from .graph import Graph, Sentinel, degree_summary, line_graph
from .polynomial import (
    IntPolynomial,
    PolynomialStructure,
    derivative,
    evaluate,
    integrate_unit_interval,
    structure,
    to_json as poly_to_json,
    to_text as poly_to_text,
    vieta_q,
)


class InvariantError(AssertionError):
    """Two independent computations of the same quantity disagree."""


def _edge_sums(g: Graph) -> Iterator[int]:
    degs = g.degrees
    for u, v in g.edges:
        yield degs[u] + degs[v]


class CoefficientProfile(Mapping):
    """Read-only mapping ``j -> c_j`` over the exponents that occur."""

    def __init__(self, counts: Mapping[int, int]):
        self._counts = {j: c for j, c in sorted(counts.items()) if c}

    def __getitem__(self, j: int) -> int:
        return self._counts[j]

    def get(self, j, default=0):
        return self._counts.get(j, default)

    def __iter__(self):
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    @property
    def m(self) -> int:
        return sum(self._counts.values())

    def polynomial(self) -> IntPolynomial:
        return IntPolynomial.from_mapping(self._counts)

    def __repr__(self) -> str:
        return f"CoefficientProfile({self._counts})"


def harmonic_polynomial(g: Graph) -> IntPolynomial:
    degs = g.degrees
    if not g.m:
        return IntPolynomial()
    coeffs = [0] * (2 * max(degs))
    for u, v in g.edges:
        coeffs[degs[u] + degs[v] - 1] += 1
    return IntPolynomial(coeffs)


def first_zagreb_polynomial(g: Graph) -> IntPolynomial:
    """Sum of x^(d_u + d_v) over the edges, i.e. x times the harmonic polynomial."""
    return IntPolynomial.from_mapping(Counter(_edge_sums(g)))


def coefficient_profile(g: Graph) -> CoefficientProfile:
    return CoefficientProfile(Counter(s - 1 for s in _edge_sums(g)))


def harmonic_index(g: Graph) -> Fraction:
    """Sum of 2/(d_u + d_v), by edge sum and by integrating the polynomial."""
    sums = list(_edge_sums(g))
    common = math.lcm(*sums) if sums else 1
    direct = Fraction(sum(2 * common // s for s in sums), common)
    via_profile = _fraction_sum((2 * c, j + 1) for j, c in coefficient_profile(g).items())
    if direct != via_profile:
        raise InvariantError(f"harmonic index mismatch: {direct} != {via_profile}")
    return direct


def _fraction_sum(terms: Iterable[tuple[int, int]]) -> Fraction:
    """Exact sum of num/den pairs over a single common denominator."""
    terms = list(terms)
    common = math.lcm(*(d for _, d in terms)) if terms else 1
    return Fraction(sum(n * (common // d) for n, d in terms), common)


def harmonic_index_by_integral(p: IntPolynomial) -> Fraction:
    return 2 * integrate_unit_interval(p)


@dataclass(frozen=True)
class ZagrebIndices:
    m1: int
    m2: int
    f: int


def zagreb_and_forgotten(g: Graph) -> ZagrebIndices:
    degs = g.degrees
    m1 = sum(degs[u] + degs[v] for u, v in g.edges)
    m2 = sum(degs[u] * degs[v] for u, v in g.edges)
    f = sum(degs[u] ** 2 + degs[v] ** 2 for u, v in g.edges)
    if m1 != sum(d * d for d in degs):
        raise InvariantError("first Zagreb index: edge sum != vertex sum of squares")
    if f != sum(d**3 for d in degs):
        raise InvariantError("forgotten index: edge sum != vertex sum of cubes")
    return ZagrebIndices(m1, m2, f)


def _is_integral(alpha) -> bool:
    if isinstance(alpha, int):
        return True
    if isinstance(alpha, _RationalABC):
        return alpha.denominator == 1
    return False


def chi(g: Graph, alpha) -> Fraction | float:
    """General sum-connectivity index: sum over edges of (d_u + d_v)**alpha.

    Integer ``alpha`` (including negative) gives an exact ``Fraction``; any
    other exponent gives a float.
    """
    profile = coefficient_profile(g)
    if _is_integral(alpha):
        a = int(alpha)
        value = sum((c * Fraction(j + 1) ** a for j, c in profile.items()), Fraction(0))
        if a == 1 and value != zagreb_and_forgotten(g).m1:
            raise InvariantError("chi_1 differs from M1")
        if a == -1 and 2 * value != harmonic_index(g):
            raise InvariantError("2 chi_-1 differs from the harmonic index")
        return value
    a = float(alpha)
    return math.fsum(c * (j + 1) ** a for j, c in profile.items())


def chi_by_edges(g: Graph, alpha) -> Fraction | float:
    """Same index summed edge by edge, without the profile."""
    if _is_integral(alpha):
        a = int(alpha)
        return sum((Fraction(s) ** a for s in _edge_sums(g)), Fraction(0))
    a = float(alpha)
    return math.fsum(s**a for s in _edge_sums(g))


def chi_complex(g: Graph, z: complex) -> complex:
    z = complex(z)
    return sum(
        (c * cmath.exp(z * math.log(j + 1)) for j, c in coefficient_profile(g).items()),
        0j,
    )


def pi1_star(g: Graph) -> int:
    """Product of d_u + d_v over the edges (empty product is 1)."""
    via_profile = math.prod((j + 1) ** c for j, c in coefficient_profile(g).items())
    if via_profile != math.prod(_edge_sums(g)):
        raise InvariantError("multiplicative index mismatch")
    return via_profile


def _checked_mu(mu: Callable[[int], float], t: int) -> float:
    value = mu(t)
    if not value > 0:
        raise ValueError(f"mu({t}) = {value!r}; mu must take positive values")
    return value


def t_mu(g: Graph, mu: Callable[[int], float]) -> float:
    """Sum of mu(d_u + d_v) over the edges, evaluated bucket by bucket."""
    return math.fsum(c * _checked_mu(mu, j + 1) for j, c in coefficient_profile(g).items())


def u_mu(g: Graph, mu: Callable[[int], float]) -> float:
    """Product of mu(d_u + d_v) over the edges, evaluated bucket by bucket."""
    return math.prod(_checked_mu(mu, j + 1) ** c for j, c in coefficient_profile(g).items())


@dataclass(frozen=True)
class Relation:
    """Both sides of an identity (``==``) or inequality (``<=``, ``<``)."""

    name: str
    lhs: object
    rhs: object
    op: str = "=="

    @property
    def holds(self) -> bool:
        if self.op == "==":
            return self.lhs == self.rhs
        if self.op == "<=":
            return self.lhs <= self.rhs
        if self.op == "<":
            return self.lhs < self.rhs
        if self.op == "<=>":
            return bool(self.lhs) == bool(self.rhs)
        if self.op == "=>":
            return (not self.lhs) or bool(self.rhs)
        raise ValueError(f"unknown relation {self.op!r}")

    def __str__(self) -> str:
        return f"{self.name}: {_fmt(self.lhs)} {self.op} {_fmt(self.rhs)}"


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    return repr(x) if isinstance(x, (Sentinel, float)) else str(x)


def derivative_identities(g: Graph, k_max: int = 5) -> list[Relation]:
    """The evaluations at x = 1 of the polynomial and its derivatives, each
    paired with the same quantity computed from vertex degrees.

    The two-sided vertex-count bound needs a graph without isolated vertices.
    """
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    p = harmonic_polynomial(g)
    at1 = [evaluate(derivative(p, k), 1) for k in range(k_max + 1)]
    z = zagreb_and_forgotten(g)
    m1_line = zagreb_and_forgotten(line_graph(g)).m1
    out = [
        Relation("H(1) = m", at1[0], g.m),
        Relation("H'(1) + H(1) = M1", at1[1] + at1[0], z.m1),
        Relation("H''(1) - 2H(1) = F + 2M2 - 3M1", at1[2] - 2 * at1[0], z.f + 2 * z.m2 - 3 * z.m1),
        Relation("H''(1) + 2H(1) = M1(L(G)) + M1", at1[2] + 2 * at1[0], m1_line + z.m1),
    ]
    summary = degree_summary(g)
    if g.m and summary.isolated == 0:
        out.append(Relation("2H(1)/maxdeg <= n", Fraction(2 * at1[0], summary.max_degree), g.n, "<="))
        out.append(Relation("n <= 2H(1)/mindeg", g.n, Fraction(2 * at1[0], summary.min_degree), "<="))
    degs = g.degrees
    sums = [degs[u] + degs[v] for u, v in g.edges]
    for k in range(1, k_max + 1):
        q = vieta_q(k).coeffs
        # chi_j for j <= k straight from the edge sums
        chis = [sum(s**j for s in sums) for j in range(k + 1)]
        rhs = chis[k] + sum(q[j] * chis[j] for j in range(k))
        out.append(Relation(f"H^({k})(1) = chi_{k} + sum a_{k},j chi_j", at1[k], rhs))
    return out


@dataclass
class IndexReport:
    n: int
    m: int
    max_degree: int | Sentinel
    min_degree: int | Sentinel
    polynomial: IntPolynomial
    structure: PolynomialStructure
    harmonic: Fraction
    m1: int
    m2: int
    f: int
    pi1_star: int
    chi: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        s = self.structure
        return {
            "n": self.n,
            "m": self.m,
            "max_degree": _jsonable(self.max_degree),
            "min_degree": _jsonable(self.min_degree),
            "polynomial": poly_to_json(self.polynomial),
            "polynomial_text": poly_to_text(self.polynomial),
            "structure": {
                "degree": _jsonable(s.degree),
                "min_degree": _jsonable(s.min_degree),
                "nonzero_count": s.nonzero_count,
                "leading": _jsonable(s.leading),
                "trailing": _jsonable(s.trailing),
            },
            "harmonic_index": exact_str(self.harmonic),
            "M1": exact_str(self.m1),
            "M2": exact_str(self.m2),
            "F": exact_str(self.f),
            "Pi1_star": exact_str(self.pi1_star),
            "chi": {str(a): _jsonable(v) for a, v in self.chi.items()},
        }

    def to_text(self) -> str:
        s = self.structure
        lines = [
            f"n = {self.n}, m = {self.m}, max degree = {_plain(self.max_degree)}, "
            f"min degree = {_plain(self.min_degree)}",
            f"H(G,x) = {poly_to_text(self.polynomial)}",
            f"Deg = {_plain(s.degree)}, Deg_min = {_plain(s.min_degree)}, K = {s.nonzero_count}, "
            f"c_max = {_plain(s.leading)}, c_min = {_plain(s.trailing)}",
            f"H = {self.harmonic}",
            f"M1 = {self.m1}, M2 = {self.m2}, F = {self.f}, Pi1* = {self.pi1_star}",
        ]
        for a, v in self.chi.items():
            lines.append(f"chi_{a} = {v if isinstance(v, Fraction) else f'{v!r} (approx)'}")
        return "\n".join(lines)


def exact_str(x: int | Fraction) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


def _jsonable(x):
    if isinstance(x, Sentinel):
        return x.value
    if isinstance(x, float):
        return {"value": x, "approx": True}
    return exact_str(x)


def _plain(x) -> str:
    return x.value if isinstance(x, Sentinel) else str(x)


def parse_alpha(text: str) -> int | Fraction | float:
    """Exponent from text: integers and ``p/q`` stay exact, decimals become floats."""
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    if "/" in text:
        q = Fraction(text)
        return int(q) if q.denominator == 1 else q
    return float(text)


def index_report(g: Graph, alphas: Sequence = ()) -> IndexReport:
    p = harmonic_polynomial(g)
    if p != coefficient_profile(g).polynomial():
        raise InvariantError("profile does not reconstruct the harmonic polynomial")
    if harmonic_index_by_integral(p) != harmonic_index(g):
        raise InvariantError("integral of the polynomial disagrees with the harmonic index")
    summary = degree_summary(g)
    z = zagreb_and_forgotten(g)
    chis = {}
    for a in alphas:
        value = chi(g, a)
        check = chi_by_edges(g, a)
        if isinstance(value, Fraction):
            ok = value == check
        else:
            ok = math.isclose(value, check, rel_tol=1e-12)
        if not ok:
            raise InvariantError(f"chi_{a} mismatch: {value} != {check}")
        chis[a] = value
    return IndexReport(
        n=g.n,
        m=g.m,
        max_degree=summary.max_degree,
        min_degree=summary.min_degree,
        polynomial=p,
        structure=structure(p),
        harmonic=harmonic_index(g),
        m1=z.m1,
        m2=z.m2,
        f=z.f,
        pi1_star=pi1_star(g),
        chi=chis,
    )
