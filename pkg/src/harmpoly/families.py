"""Named graph families, their closed-form harmonic polynomials, and the two
sharpness constructions (the layered tree ``T_r`` and the union ``G_r``).

Vertex labelling:

* complete, cycle, path: ``0..n-1`` in order (cycle closes ``n-1 ~ 0``);
* wheel: hub ``0``, rim ``1..n-1`` in cyclic order;
* star: centre ``0``, leaves ``1..n-1``;
* complete bipartite ``K_{n1,n2}``: left side ``0..n1-1``, right side after it;
* hypercube: the integers ``0..2^n-1``, adjacent at Hamming distance 1;
* ``T_r``: breadth-first from the root ``0``;
* ``G_r``: the listed ``K_{a,b}`` blocks, each labelled as above, concatenated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, disjoint_union
from .polynomial import IntPolynomial

FAMILY_MINIMUMS = {
    "complete": (1,),
    "cycle": (3,),
    "hypercube": (1,),
    "kbip": (1, 1),
    "path": (2,),
    "wheel": (4,),
    "star": (2,),
    "trtree": (3,),
    "grunion": (1,),
}


class FamilyError(ValueError):
    pass


class ClosedFormUnavailable(LookupError):
    """No closed form exists; the known shape of the polynomial is attached."""

    def __init__(self, spec: "FamilySpec", nonzero_count: int, support: tuple[int, ...]):
        super().__init__(f"no closed-form polynomial for {spec}")
        self.nonzero_count = nonzero_count
        self.support = support


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in FAMILY_MINIMUMS:
            raise FamilyError(f"unknown family {self.family!r}")
        mins = FAMILY_MINIMUMS[self.family]
        if len(self.params) != len(mins):
            raise FamilyError(f"{self.family} takes {len(mins)} parameter(s), got {len(self.params)}")
        for p, lo in zip(self.params, mins):
            if p < lo:
                raise FamilyError(f"{self.family} requires parameters >= {lo}, got {p}")

    def __str__(self) -> str:
        return f"{self.family}:{','.join(map(str, self.params))}"


def parse_family(text: str) -> FamilySpec:
    """``wheel:6`` / ``kbip:2,3`` style specs."""
    name, sep, rest = text.strip().partition(":")
    if not sep or not rest:
        raise FamilyError(f"expected <family>:<params>, got {text!r}")
    try:
        params = tuple(int(p) for p in rest.split(","))
    except ValueError:
        raise FamilyError(f"non-integer parameter in {text!r}") from None
    return FamilySpec(name.strip().lower(), params)


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for v in range(n) for u in range(v)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(n: int) -> Graph:
    return Graph(n, ((0, i) for i in range(1, n)))


def wheel_graph(n: int) -> Graph:
    rim = n - 1
    spokes = [(0, i) for i in range(1, n)]
    ring = [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return Graph(n, spokes + ring)


def complete_bipartite(n1: int, n2: int) -> Graph:
    return Graph(n1 + n2, ((u, n1 + v) for u in range(n1) for v in range(n2)))


def hypercube(n: int) -> Graph:
    size = 1 << n
    return Graph(size, ((v, v ^ (1 << b)) for v in range(size) for b in range(n) if v < v ^ (1 << b)))


def t_r_sequence(r: int) -> list[int]:
    """Ordering of 1..r whose neighbouring pairs sum to r+1 or r+2."""
    if r < 3:
        raise FamilyError("T_r needs r >= 3")
    if r % 2 == 0:
        hi, lo = r // 2 + 1, r // 2
        seq = []
        for i in range(r // 2):
            seq += [hi + i, lo - i]
    else:
        c = (r + 1) // 2
        seq = [c]
        for i in range(1, c):
            seq += [c + i, c - i]
    assert sorted(seq) == list(range(1, r + 1)) and seq[-1] == 1
    assert all(seq[j] + seq[j + 1] in (r + 1, r + 2) for j in range(r - 1))
    return seq


def t_r_tree(r: int) -> Graph:
    """Rooted tree whose vertices at depth ``j-1`` have degree ``a_j``.

    The root gets ``a_1`` children; every vertex at depth 1..r-2 gets
    ``a_j - 1`` children; depth ``r-1`` holds the leaves (``a_r == 1``).
    """
    a = t_r_sequence(r)
    edges = []
    layer = [0]
    count = 1
    for depth in range(r - 1):
        children = a[0] if depth == 0 else a[depth] - 1
        nxt = []
        for u in layer:
            for _ in range(children):
                edges.append((u, count))
                nxt.append(count)
                count += 1
        layer = nxt
    return Graph(count, edges)


def g_r_blocks(r: int) -> list[tuple[int, int]]:
    """Sides ``(i, r+1-i)`` of the complete bipartite blocks of ``G_r``."""
    if r < 1:
        raise FamilyError("G_r needs r >= 1")
    return [(i, r + 1 - i) for i in range(1, (r + 1) // 2 + 1)]


def g_r_union(r: int) -> Graph:
    return disjoint_union(*(complete_bipartite(a, b) for a, b in g_r_blocks(r)))


_GENERATORS = {
    "complete": complete_graph,
    "cycle": cycle_graph,
    "hypercube": hypercube,
    "kbip": complete_bipartite,
    "path": path_graph,
    "wheel": wheel_graph,
    "star": star_graph,
    "trtree": t_r_tree,
    "grunion": g_r_union,
}


def generate(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_family(spec)
    return _GENERATORS[spec.family](*spec.params)


def _mono(c: int, e: int) -> IntPolynomial:
    return IntPolynomial.monomial(c, e) if c else IntPolynomial()


def closed_form_polynomial(spec: FamilySpec | str) -> IntPolynomial:
    """The known formula for the harmonic polynomial of a family member.

    Raises :class:`ClosedFormUnavailable` for ``trtree``, whose coefficients
    depend on the layer sizes; the exception still carries the number of
    terms (2) and the exponent support ``(r, r+1)``.
    """
    if isinstance(spec, str):
        spec = parse_family(spec)
    f, p = spec.family, spec.params
    if f == "complete":
        n = p[0]
        return _mono(n * (n - 1) // 2, max(2 * n - 3, 0))
    if f == "cycle":
        return _mono(p[0], 3)
    if f == "hypercube":
        n = p[0]
        return _mono(n * 2 ** (n - 1), 2 * n - 1)
    if f == "kbip":
        n1, n2 = p
        return _mono(n1 * n2, n1 + n2 - 1)
    if f == "path":
        n = p[0]
        if n == 2:
            # P_2 is 1-regular: m x^(2k-1) with m = k = 1; the path formula
            # below only holds from n = 3
            return _mono(1, 1)
        return IntPolynomial.from_mapping({2: 2, 3: n - 3})
    if f == "wheel":
        n = p[0]
        return IntPolynomial.from_mapping({n + 1: n - 1}) + _mono(n - 1, 5)
    if f == "star":
        n = p[0]
        return _mono(n - 1, n - 1)
    if f == "grunion":
        r = p[0]
        return _mono(sum(a * b for a, b in g_r_blocks(r)), r)
    if f == "trtree":
        r = p[0]
        raise ClosedFormUnavailable(spec, 2, (r, r + 1))
    raise FamilyError(f"unknown family {f!r}")  # pragma: no cover


def regular_closed_form(m: int, k: int) -> IntPolynomial:
    """m x^(2k-1) for a k-regular graph with m edges."""
    return _mono(m, 2 * k - 1) if k else IntPolynomial()
