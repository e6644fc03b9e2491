"""Exhaustive small-graph enumeration, executable theorem checks, and a miner
for non-isomorphic graphs that share a harmonic polynomial.

Each registered check compares a quantity read off the harmonic polynomial
with one computed from the graph itself. A check whose hypotheses fail on a
graph is reported as not applicable, never as a pass.
"""

from __future__ import annotations

import enum
import itertools
import math
import os
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Iterator

from . import graph as gc
from .families import path_graph, regular_closed_form
from .formats import write_graph6
from .graph import Graph
from .indices import (
    Relation,
    chi_by_edges,
    coefficient_profile,
    derivative_identities,
    harmonic_index,
    harmonic_polynomial,
    pi1_star,
    zagreb_and_forgotten,
)
from .polynomial import (
    IntPolynomial,
    Parity,
    derivative,
    evaluate,
    has_nonzero_root,
    parity,
    root_multiplicity_at_zero,
)

ENUMERATION_LIMIT = 7
EXTENDED_LIMIT = 8
SAMPLE_POINTS = (Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(7, 2))
SUBGRAPH_SAMPLES = 3
COLLISION_ALPHAS = (-2, -1, Fraction(-1, 2), 0, Fraction(1, 2), 1, 2, 3)


class EnumerationLimitError(ValueError):
    pass


# -- enumeration ----------------------------------------------------------------


def _pairs(n: int) -> list[tuple[int, int]]:
    # graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
    return [(i, j) for j in range(n) for i in range(j)]


def graph_from_mask(n: int, mask: int, pairs: list[tuple[int, int]] | None = None) -> Graph:
    pairs = pairs if pairs is not None else _pairs(n)
    adj: list[list[int]] = [[] for _ in range(n)]
    k = 0
    while mask:
        if mask & 1:
            i, j = pairs[k]
            adj[i].append(j)
            adj[j].append(i)
        mask >>= 1
        k += 1
    return Graph._from_adjacency(adj)


def _check_enumeration_size(n: int, allow_large: bool) -> None:
    limit = EXTENDED_LIMIT if allow_large else ENUMERATION_LIMIT
    if n > limit:
        count = 1 << (n * (n - 1) // 2)
        hint = "" if allow_large or n > EXTENDED_LIMIT else " (n=8 needs the explicit opt-in)"
        raise EnumerationLimitError(
            f"refusing to enumerate {count} labeled graphs on {n} vertices; limit is n <= {limit}{hint}"
        )


def _iter_masks(n: int, start: int, stop: int, connected_only: bool) -> Iterator[Graph]:
    pairs = _pairs(n)
    for mask in range(start, stop):
        g = graph_from_mask(n, mask, pairs)
        if connected_only and not gc.is_connected(g):
            continue
        yield g


def enumerate_graphs(
    n: int,
    connected_only: bool = False,
    deduplicate: bool = False,
    allow_large: bool = False,
) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices, once each.

    With ``deduplicate`` only the first labeled representative of each
    isomorphism class is produced.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    _check_enumeration_size(n, allow_large)
    stream = _iter_masks(n, 0, 1 << (n * (n - 1) // 2), connected_only)
    if not deduplicate:
        yield from stream
        return
    seen = set()
    for g in stream:
        key = gc.canonical_form(g)
        if key not in seen:
            seen.add(key)
            yield g


# -- per-graph facts -------------------------------------------------------------


class Facts:
    """Lazily computed quantities shared by all checks on one graph."""

    def __init__(self, g: Graph):
        self.g = g

    @cached_property
    def graph6(self) -> str:
        return write_graph6(self.g)

    @cached_property
    def summary(self) -> gc.DegreeSummary:
        return gc.degree_summary(self.g)

    @cached_property
    def poly(self) -> IntPolynomial:
        return harmonic_polynomial(self.g)

    @cached_property
    def K(self) -> int:
        return self.poly.nonzero_count

    @cached_property
    def edge_sums(self) -> list[int]:
        d = self.g.degrees
        return [d[u] + d[v] for u, v in self.g.edges]

    @cached_property
    def zagreb(self):
        return zagreb_and_forgotten(self.g)

    @cached_property
    def harmonic(self) -> Fraction:
        return harmonic_index(self.g)

    @cached_property
    def components(self) -> list[gc.Component]:
        return gc.connected_components(self.g)

    @cached_property
    def connected(self) -> bool:
        return len(self.components) == 1

    @cached_property
    def classes(self):
        return gc.regularity_class(self.g)

    @cached_property
    def coherent(self) -> bool:
        return gc.is_coherent(self.g)

    @cached_property
    def k2_union(self) -> bool:
        return gc.is_disjoint_union_of_k2(self.g)

    @cached_property
    def profile(self):
        return coefficient_profile(self.g)

    @cached_property
    def triangle_free(self) -> bool:
        return gc.is_triangle_free(self.g)

    @cached_property
    def identities(self) -> list[Relation]:
        return derivative_identities(self.g, 5)

    @cached_property
    def rng(self) -> random.Random:
        # seeded by the labeled graph itself so runs are reproducible
        return random.Random(f"{self.g.n}:{self.graph6}")

    def sampled_proper_subgraphs(self) -> list[Graph]:
        g = self.g
        edges = list(g.edges)
        out = []
        for t in range(SUBGRAPH_SAMPLES):
            if t % 2 == 0 or g.n < 2:
                drop = self.rng.randint(1, len(edges))
                keep = self.rng.sample(edges, len(edges) - drop)
                out.append(Graph(g.n, keep))
            else:
                removed = self.rng.randrange(g.n)
                out.append(gc.induced_subgraph(g, [v for v in range(g.n) if v != removed]))
        return out


# -- registry ----------------------------------------------------------------------


class Verdict(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NA = "na"


@dataclass(frozen=True)
class Witness:
    graph6: str
    relation: str

    def to_json(self) -> dict:
        return {"graph6": self.graph6, "relation": self.relation}


@dataclass(frozen=True)
class TheoremCheck:
    theorem: str
    verdict: Verdict
    reason: str = ""
    witness: Witness | None = None
    events: tuple[str, ...] = ()


Hypothesis = Callable[[Facts], "str | None"]  # returns the failed hypothesis, or None


def no_isolated(f: Facts) -> str | None:
    if f.g.m == 0:
        return "graph has no edges"
    if f.summary.isolated:
        return "graph has isolated vertices"
    return None


def connected(f: Facts) -> str | None:
    return None if f.connected else "graph is not connected"


def regular(f: Facts) -> str | None:
    return None if len(f.summary.distinct) == 1 else "graph is not regular"


def at_least_two_edges(f: Facts) -> str | None:
    return None if f.g.m >= 2 else "graph has fewer than two edges"


@dataclass(frozen=True)
class Theorem:
    id: str
    title: str
    hypotheses: tuple[Hypothesis, ...]
    check: Callable[[Facts], Iterable["Relation | str"]]


REGISTRY: dict[str, Theorem] = {}
# statements that are false as written; selectable by id, never part of "all"
ERRATA: dict[str, Theorem] = {}


def theorem(tid: str, title: str, *hypotheses: Hypothesis, errata: bool = False):
    def register(fn):
        (ERRATA if errata else REGISTRY)[tid] = Theorem(tid, title, (no_isolated, *hypotheses), fn)
        return fn

    return register


def _rel(name, lhs, rhs, op="=="):
    return Relation(name, lhs, rhs, op)


@theorem("poli1", "k-regular graphs have H(G,x) = m x^(2k-1)", regular)
def _poli1(f: Facts):
    k = f.g.degrees[0]
    yield _rel("H(G,x) = m x^(2k-1)", f.poly, regular_closed_form(f.g.m, k))


@theorem("p1", "values of H and its derivatives at 1")
def _p1(f: Facts):
    yield from (r for r in f.identities if not r.name.startswith("H^("))


@theorem("p1k", "k-th derivative at 1 via falling-factorial coefficients, k <= 5")
def _p1k(f: Facts):
    yield from (r for r in f.identities if r.name.startswith("H^("))


@theorem("c1", "proper subgraphs have a different polynomial (sampled)")
def _c1(f: Facts):
    for sub in f.sampled_proper_subgraphs():
        h = harmonic_polynomial(sub)
        yield _rel("m(sub) = H(sub,1) < H(G,1) = m", evaluate(h, 1), evaluate(f.poly, 1), "<")
        yield _rel("H(sub,x) != H(G,x)", h != f.poly, True)


@theorem("p2", "positivity, monotonicity and convexity of H on [0, inf)")
def _p2(f: Facts):
    p = f.poly
    deg = p.degree
    for k in range(deg + 1):
        yield _rel(f"coefficients of H^({k}) >= 0", 0, min(derivative(p, k).coeffs), "<=")
    yield _rel("H(0) = 0", evaluate(p, 0), 0)
    d1, d2 = derivative(p, 1), derivative(p, 2)
    for x in SAMPLE_POINTS:
        yield _rel(f"H({x}) > 0", 0, evaluate(p, x), "<")
        yield _rel(f"H'({x}) > 0", 0, evaluate(d1, x), "<")
    convex = all(evaluate(d2, x) > 0 for x in SAMPLE_POINTS)
    yield _rel("H'' > 0 on samples <=> not a union of P_2", convex, not f.k2_union, "<=>")
    yield _rel("Deg >= 2 <=> not a union of P_2", deg >= 2, not f.k2_union, "<=>")


@theorem("t_p2", "0 is the only complex zero of H iff G is coherent")
def _t_p2(f: Facts):
    yield _rel("only zero at 0 <=> coherent", not has_nonzero_root(f.poly), f.coherent, "<=>")


@theorem("c_p2", "connected: only zero at 0 iff regular or biregular", connected)
def _c_p2(f: Facts):
    cls = f.classes[0]
    yield _rel("only zero at 0 <=> regular or biregular", not has_nonzero_root(f.poly),
               not isinstance(cls, gc.Neither), "<=>")


@theorem("p1bis", "H(G) >= 2 H(G,1/2), equality iff union of P_2")
def _p1bis(f: Facts):
    half = 2 * evaluate(f.poly, Fraction(1, 2))
    yield _rel("2H(G,1/2) <= H(G)", half, f.harmonic, "<=")
    yield _rel("equality <=> union of P_2", half == f.harmonic, f.k2_union, "<=>")


@theorem("p3", "zero multiplicity at 0, degree bounds, dominant vertices, subgraph degree")
def _p3(f: Facts):
    p, s = f.poly, f.summary
    yield _rel("multiplicity of 0 = min(d_u+d_v-1)", root_multiplicity_at_zero(p), min(f.edge_sums) - 1)
    yield _rel("2*mindeg - 1 <= Deg_min", 2 * s.min_degree - 1, p.min_degree, "<=")
    yield _rel("Deg_min <= Deg", p.min_degree, p.degree, "<=")
    yield _rel("Deg <= 2*maxdeg - 1", p.degree, 2 * s.max_degree - 1, "<=")
    yield _rel("Deg <= 2n - 3", p.degree, 2 * f.g.n - 3, "<=")
    pair = gc.adjacent_dominant_pair(f.g)
    yield _rel("Deg = 2n-3 <=> two adjacent dominant vertices", p.degree == 2 * f.g.n - 3,
               pair is not None, "<=>")
    if pair is not None:
        yield "deg_equals_2n-3"
    for sub in f.sampled_proper_subgraphs():
        h = harmonic_polynomial(sub)
        if not h.is_zero():
            yield _rel("Deg H(sub) <= Deg H(G)", h.degree, p.degree, "<=")


@theorem("p3_sub_min", "Deg_min H(sub) <= Deg_min H(G) for subgraphs (false in general)", errata=True)
def _p3_sub_min(f: Facts):
    g = f.g
    # every induced subgraph on >= 2 vertices, so counterexamples are found deterministically
    for size in range(2, g.n):
        for verts in itertools.combinations(range(g.n), size):
            h = harmonic_polynomial(gc.induced_subgraph(g, verts))
            if not h.is_zero():
                yield _rel(f"Deg_min H(G[{list(verts)}]) <= Deg_min H(G)", h.min_degree,
                           f.poly.min_degree, "<=")


@theorem("t_p3", "Deg >= n forces a triangle; triangle-free with Deg = n-1 forces diameter <= 3")
def _t_p3(f: Facts):
    g, deg = f.g, f.poly.degree
    if deg >= g.n:
        gi = gc.girth(g)
        yield "deg_at_least_n"
        yield _rel(f"Deg={deg} >= n={g.n} => girth = 3", True, gi == 3, "=>")
    if f.triangle_free and deg == g.n - 1:
        diam = gc.diameter(g)
        yield "triangle_free_deg_n-1"
        yield _rel("triangle-free and Deg = n-1 => connected", True, diam is not gc.DISCONNECTED, "=>")
        if diam is not gc.DISCONNECTED:
            yield _rel("diameter <= 3", diam, 3, "<=")


@theorem("t_p4", "1 <= K <= m; K = 1 iff coherent; K = m iff G is P_2")
def _t_p4(f: Facts):
    K, m = f.K, f.g.m
    yield _rel("1 <= K", 1, K, "<=")
    yield _rel("K <= m", K, m, "<=")
    yield _rel("K = 1 <=> coherent", K == 1, f.coherent, "<=>")
    is_p2 = f.g.n == 2 and gc.is_isomorphic(f.g, path_graph(2))
    yield _rel("K = m <=> G is P_2", K == m, is_p2, "<=>")


@theorem("c_p4", "m >= 2 implies 1 <= K <= m-1", at_least_two_edges)
def _c_p4(f: Facts):
    yield _rel("1 <= K", 1, f.K, "<=")
    yield _rel("K <= m - 1", f.K, f.g.m - 1, "<=")


@theorem("p4", "bounds on K from the exponent range, degrees and edge count")
def _p4(f: Facts):
    p, s, K = f.poly, f.summary, f.K
    yield _rel("K <= Deg - Deg_min + 1", K, p.degree - p.min_degree + 1, "<=")
    yield _rel("K <= 2*maxdeg - 2*mindeg + 1", K, 2 * s.max_degree - 2 * s.min_degree + 1, "<=")
    yield _rel("K <= m - 2*mindeg + 2", K, f.g.m - 2 * s.min_degree + 2, "<=")
    if f.triangle_free:
        yield _rel("triangle-free: K <= n - 2*mindeg + 1", K, f.g.n - 2 * s.min_degree + 1, "<=")


def _min_degree_count(s: int) -> int:
    """Smallest integer r with r(r+1)/2 >= s, i.e. ceil((sqrt(8s+1) - 1) / 2)."""
    d = 8 * s + 1
    q = math.isqrt(d)
    return (q - 1) // 2 if q * q == d else (q + 1) // 2


@theorem("t_sucdeg", "K <= r(r+1)/2 for r distinct degrees, and the converse count")
def _t_sucdeg(f: Facts):
    r, K = len(f.summary.distinct), f.K
    yield _rel("K <= r(r+1)/2", K, r * (r + 1) // 2, "<=")
    yield _rel("r >= ceil((sqrt(8K+1)-1)/2)", _min_degree_count(K), r, "<=")


@theorem("t_sucdeg2", "connected with r > 2 distinct degrees implies K >= 2", connected)
def _t_sucdeg2(f: Facts):
    r = len(f.summary.distinct)
    yield _rel("K >= 1", 1, f.K, "<=")
    if r > 2:
        yield _rel(f"r={r} > 2 => K >= 2", 2, f.K, "<=")


@theorem("t_sucdeg3", "a component with more than two distinct degrees forces K >= 2")
def _t_sucdeg3(f: Facts):
    wide = any(len(set(c.graph.degrees)) > 2 for c in f.components)
    yield _rel("some component has r > 2 => K >= 2", wide, f.K >= 2, "=>")


@theorem("p_sucdeg", "H odd iff every component has all-even or all-odd degrees")
def _p_sucdeg(f: Facts):
    pure = all(pp != "mixed" for pp in gc.component_degree_parities(f.g))
    yield _rel("H odd <=> components degree-pure", parity(f.poly) is Parity.ODD, pure, "<=>")


@theorem("p_sucdeg2", "H even iff every edge joins degrees of opposite parity")
def _p_sucdeg2(f: Facts):
    yield _rel("H even <=> alternated degree", parity(f.poly) is Parity.EVEN,
               gc.has_alternated_degree(f.g), "<=>")


@theorem("p5", "coefficient of x^2 counts pendant paths")
def _p5(f: Facts):
    yield _rel("[x^2] H = pendant paths", f.poly.coefficient(2), gc.pendant_path_count(f.g))


@theorem("t1", "2m^2/M1 <= H(G) <= (D+d)^2 m^2 / (2 D d M1)")
def _t1(f: Facts):
    m, m1, h = f.g.m, f.zagreb.m1, f.harmonic
    big, small = f.summary.max_degree, f.summary.min_degree
    lower = Fraction(2 * m * m, m1)
    upper = Fraction((big + small) ** 2 * m * m, 2 * big * small * m1)
    yield _rel("2m^2/M1 <= H", lower, h, "<=")
    yield _rel("H <= (D+d)^2 m^2/(2 D d M1)", h, upper, "<=")
    constant = len(set(f.edge_sums)) == 1
    yield _rel("lower equality <=> d_u+d_v constant", lower == h, constant, "<=>")
    yield _rel("lower equality <=> K = 1", lower == h, f.K == 1, "<=>")
    is_regular = big == small
    yield _rel("regular => upper equality", is_regular, upper == h, "=>")
    if lower == h:
        yield "lower_equality"
    if upper == h:
        yield "upper_equality"
        if not is_regular:
            yield "upper_equality_nonregular"


@theorem("p6", "2d-1 <= Deg_min <= H'(1)/m and 4m/n - 1 <= Deg <= 2D-1")
def _p6(f: Facts):
    p, s, m, n = f.poly, f.summary, f.g.m, f.g.n
    yield _rel("2*mindeg - 1 <= Deg_min", 2 * s.min_degree - 1, p.min_degree, "<=")
    yield _rel("Deg_min <= H'(1)/m", p.min_degree, evaluate(derivative(p, 1), 1) / m, "<=")
    yield _rel("4m/n - 1 <= Deg", Fraction(4 * m, n) - 1, p.degree, "<=")
    yield _rel("Deg <= 2*maxdeg - 1", p.degree, 2 * s.max_degree - 1, "<=")


@theorem("p7", "bounds on H(G) from the extreme coefficients")
def _p7(f: Facts):
    p, m = f.poly, f.g.m
    hi, lo = p.degree, p.min_degree
    cmax, cmin = p.coefficient(hi), p.coefficient(lo)
    lower = Fraction(2 * cmin, lo + 1) + Fraction(2 * m - 2 * cmin, hi + 1)
    upper = Fraction(2 * cmax, hi + 1) + Fraction(2 * m - 2 * cmax, lo + 1)
    yield _rel("lower sandwich <= H", lower, f.harmonic, "<=")
    yield _rel("H <= upper sandwich", f.harmonic, upper, "<=")


def _exact_mus():
    # (name, mu, whether the product form stays integral)
    return (
        ("t", lambda t: t, True),
        ("t^2", lambda t: t * t, True),
        ("2^t", lambda t: 2**t, True),
        ("1/t", lambda t: Fraction(1, t), False),
    )


@theorem("t_mu", "T_mu and U_mu are functions of the coefficient profile")
def _t_mu(f: Facts):
    profile = f.profile
    yield _rel("profile reconstructs H", profile.polynomial(), f.poly)
    for name, mu, integral in _exact_mus():
        t_profile = sum(c * mu(j + 1) for j, c in profile.items())
        t_edges = sum(mu(s) for s in f.edge_sums)
        yield _rel(f"T_mu profile = edges, mu={name}", t_profile, t_edges)
        if integral:
            u_profile = math.prod(mu(j + 1) ** c for j, c in profile.items())
            u_edges = math.prod(mu(s) for s in f.edge_sums)
            yield _rel(f"U_mu profile = edges, mu={name}", u_profile, u_edges)


def resolve_registry(ids: str | Iterable[str] | None) -> dict[str, Theorem]:
    """``None``/``"all"`` for every sound theorem; otherwise ids (errata allowed)."""
    if ids is None or ids == "all":
        return dict(REGISTRY)
    if isinstance(ids, str):
        ids = [t for t in ids.split(",") if t]
    out = {}
    for tid in ids:
        tid = tid.strip()
        if tid == "all":
            out.update(REGISTRY)
        elif tid in REGISTRY:
            out[tid] = REGISTRY[tid]
        elif tid in ERRATA:
            out[tid] = ERRATA[tid]
        else:
            raise KeyError(f"unknown theorem id {tid!r}")
    return out


def run_checks(g: Graph, registry: dict[str, Theorem] | Iterable[str] | str | None = None) -> list[TheoremCheck]:
    if not isinstance(registry, dict):
        registry = resolve_registry(registry)
    facts = Facts(g)
    results = []
    for tid in sorted(registry):
        thm = registry[tid]
        failed = next((msg for msg in (h(facts) for h in thm.hypotheses) if msg), None)
        if failed:
            results.append(TheoremCheck(tid, Verdict.NA, reason=failed))
            continue
        events = []
        witness = None
        for item in thm.check(facts):
            if isinstance(item, str):
                events.append(item)
            elif not item.holds:
                witness = Witness(facts.graph6, str(item))
                break
        verdict = Verdict.FAIL if witness else Verdict.PASS
        results.append(TheoremCheck(tid, verdict, witness=witness, events=tuple(events)))
    return results


# -- corpus verification -------------------------------------------------------------

MAX_WITNESSES = 25


@dataclass
class VerificationReport:
    n_min: int
    n_max: int
    connected_only: bool
    size: int = 0
    tallies: dict[str, Counter] = field(default_factory=dict)
    events: dict[str, Counter] = field(default_factory=dict)
    failures: dict[str, list[Witness]] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def fail_count(self) -> int:
        return sum(t["fail"] for t in self.tallies.values())

    @property
    def ok(self) -> bool:
        return self.fail_count == 0

    def add(self, checks: list[TheoremCheck]) -> None:
        self.size += 1
        for c in checks:
            self.tallies.setdefault(c.theorem, Counter())[c.verdict.value] += 1
            if c.events:
                self.events.setdefault(c.theorem, Counter()).update(c.events)
            if c.witness is not None:
                self.failures.setdefault(c.theorem, []).append(c.witness)

    def merge(self, other: "VerificationReport") -> None:
        self.size += other.size
        for tid, t in other.tallies.items():
            self.tallies.setdefault(tid, Counter()).update(t)
        for tid, e in other.events.items():
            self.events.setdefault(tid, Counter()).update(e)
        for tid, w in other.failures.items():
            self.failures.setdefault(tid, []).extend(w)

    def to_json(self) -> dict:
        """Deterministic content only (timing lives in ``elapsed``)."""
        theorems = {}
        for tid in sorted(self.tallies):
            t = self.tallies[tid]
            entry = {"pass": t["pass"], "fail": t["fail"], "na": t["na"]}
            if tid in self.events:
                entry["events"] = dict(sorted(self.events[tid].items()))
            wits = sorted(self.failures.get(tid, []), key=lambda w: (len(w.graph6), w.graph6, w.relation))
            if wits:
                entry["witnesses"] = [w.to_json() for w in wits[:MAX_WITNESSES]]
            theorems[tid] = entry
        return {
            "corpus": {
                "n_min": self.n_min,
                "n_max": self.n_max,
                "connected_only": self.connected_only,
                "size": self.size,
            },
            "fail_count": self.fail_count,
            "theorems": theorems,
        }

    def to_text(self) -> str:
        head = (
            f"corpus: n = {self.n_min}..{self.n_max}, "
            f"{'connected' if self.connected_only else 'all'} labeled graphs, {self.size} graphs"
        )
        rows = [head, f"{'theorem':<12} {'pass':>8} {'fail':>6} {'na':>8}  events"]
        for tid in sorted(self.tallies):
            t = self.tallies[tid]
            ev = ", ".join(f"{k}={v}" for k, v in sorted(self.events.get(tid, {}).items()))
            rows.append(f"{tid:<12} {t['pass']:>8} {t['fail']:>6} {t['na']:>8}  {ev}")
        for tid in sorted(self.failures):
            for w in self.failures[tid][:5]:
                rows.append(f"FAIL {tid}: {w.graph6}  {w.relation}")
        rows.append(f"failures: {self.fail_count}   elapsed: {self.elapsed:.2f} s")
        return "\n".join(rows)


def _verify_chunk(args) -> VerificationReport:
    n, start, stop, connected_only, ids = args
    registry = resolve_registry(ids)
    part = VerificationReport(n, n, connected_only)
    for tid in registry:
        part.tallies[tid] = Counter()
    for g in _iter_masks(n, start, stop, connected_only):
        part.add(run_checks(g, registry))
    return part


CHUNK = 4096


def verify_corpus(
    n_max: int,
    connected_only: bool = False,
    registry: Iterable[str] | str | None = None,
    workers: int = 1,
    n_min: int = 1,
    allow_large: bool = False,
) -> VerificationReport:
    """Run the registered checks on every labeled graph with n_min <= n <= n_max."""
    ids = sorted(resolve_registry(registry))
    for n in range(n_min, n_max + 1):
        _check_enumeration_size(n, allow_large)
    tasks = []
    for n in range(n_min, n_max + 1):
        total = 1 << (n * (n - 1) // 2)
        for start in range(0, total, CHUNK):
            tasks.append((n, start, min(total, start + CHUNK), connected_only, ids))
    report = VerificationReport(n_min, n_max, connected_only)
    for tid in ids:
        report.tallies[tid] = Counter()
    started = time.perf_counter()
    if workers <= 1:
        parts = map(_verify_chunk, tasks)
        for part in parts:
            report.merge(part)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_verify_chunk, tasks):
                report.merge(part)
    report.elapsed = time.perf_counter() - started
    return report


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("HP_WORKERS", "1")))
    except ValueError:
        return 1


# -- collision mining -----------------------------------------------------------------


@dataclass
class CollisionPair:
    first: Graph
    second: Graph
    polynomial: IntPolynomial
    checks: list[Relation]

    @property
    def ok(self) -> bool:
        return all(r.holds for r in self.checks)

    @property
    def both_connected(self) -> bool:
        return gc.is_connected(self.first) and gc.is_connected(self.second)

    def to_json(self) -> dict:
        from .polynomial import to_json as poly_json

        return {
            "first": write_graph6(self.first),
            "second": write_graph6(self.second),
            "polynomial": poly_json(self.polynomial),
            "agree": self.ok,
            "failed": [str(r) for r in self.checks if not r.holds],
        }


@dataclass(frozen=True)
class _Close:
    """Float agreement to a relative tolerance, shaped like a Relation."""

    name: str
    lhs: float
    rhs: float
    rel_tol: float = 1e-12

    @property
    def holds(self) -> bool:
        return math.isclose(self.lhs, self.rhs, rel_tol=self.rel_tol, abs_tol=0.0)

    def __str__(self) -> str:
        return f"{self.name}: {self.lhs!r} ~ {self.rhs!r} (rel {self.rel_tol})"


def agreement_battery(g1: Graph, g2: Graph) -> list:
    """Indices that must coincide when the harmonic polynomials coincide,
    each evaluated edge by edge on both graphs."""
    out = []
    for a in COLLISION_ALPHAS:
        if isinstance(a, Fraction) and a.denominator != 1:
            out.append(_Close(f"chi_{a}", chi_by_edges(g1, a), chi_by_edges(g2, a)))
        else:
            out.append(Relation(f"chi_{a}", chi_by_edges(g1, a), chi_by_edges(g2, a)))
    out.append(Relation("Pi1*", pi1_star(g1), pi1_star(g2)))
    d1, d2 = g1.degrees, g2.degrees
    s1 = [d1[u] + d1[v] for u, v in g1.edges]
    s2 = [d2[u] + d2[v] for u, v in g2.edges]
    for name, mu, _ in _exact_mus():
        out.append(Relation(f"T_mu, mu={name}", sum(map(mu, s1)), sum(map(mu, s2))))
        out.append(Relation(f"U_mu, mu={name}", math.prod(map(mu, s1)), math.prod(map(mu, s2))))
    return out


def collision_classes(n_max: int, allow_large: bool = False) -> list[Graph]:
    """One representative per isomorphism class, n = 2..n_max, without isolated vertices."""
    reps = []
    for n in range(2, n_max + 1):
        _check_enumeration_size(n, allow_large)
        for g in enumerate_graphs(n, deduplicate=True, allow_large=allow_large):
            if not gc.has_isolated_vertices(g):
                reps.append(g)
    return reps


def mine_collisions(n_max: int, allow_large: bool = False) -> list[CollisionPair]:
    """Non-isomorphic graphs (no isolated vertices, n <= n_max) sharing H(G,x)."""
    if n_max > EXTENDED_LIMIT:
        raise EnumerationLimitError(f"collision mining is limited to n_max <= {EXTENDED_LIMIT}")
    groups: dict[IntPolynomial, list[Graph]] = {}
    for g in collision_classes(n_max, allow_large=allow_large or n_max == EXTENDED_LIMIT):
        groups.setdefault(harmonic_polynomial(g), []).append(g)
    pairs = []
    for poly in sorted(groups, key=lambda p: (len(p.coeffs), p.coeffs)):
        members = groups[poly]
        for g1, g2 in itertools.combinations(members, 2):
            if gc.is_isomorphic(g1, g2):
                raise AssertionError("deduplicated enumeration produced isomorphic graphs")
            pairs.append(CollisionPair(g1, g2, poly, agreement_battery(g1, g2)))
    return pairs
