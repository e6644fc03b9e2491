import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from harmpoly.families import complete_graph, cycle_graph, path_graph, star_graph
from harmpoly.graph import Graph, disjoint_union
from harmpoly.indices import (
    Relation,
    chi,
    chi_by_edges,
    chi_complex,
    coefficient_profile,
    derivative_identities,
    exact_str,
    first_zagreb_polynomial,
    harmonic_index,
    harmonic_index_by_integral,
    harmonic_polynomial,
    index_report,
    parse_alpha,
    pi1_star,
    t_mu,
    u_mu,
    zagreb_and_forgotten,
)
from harmpoly.polynomial import IntPolynomial

from conftest import graphs, to_nx


def nx_degree_sums(g):
    h = to_nx(g)
    return [h.degree[u] + h.degree[v] for u, v in h.edges]


def test_small_examples():
    assert harmonic_polynomial(cycle_graph(3)) == IntPolynomial([0, 0, 0, 3])
    assert harmonic_index(cycle_graph(3)) == Fraction(3, 2)
    # P_4: edge sums 3, 4, 3
    p4 = path_graph(4)
    assert harmonic_polynomial(p4) == IntPolynomial([0, 0, 2, 1])
    assert harmonic_index(p4) == Fraction(11, 6)
    z = zagreb_and_forgotten(p4)
    assert (z.m1, z.m2, z.f) == (10, 8, 18)
    assert pi1_star(p4) == 36


def test_empty_graph_indices():
    g = Graph(3)
    assert harmonic_polynomial(g).is_zero()
    assert harmonic_index(g) == 0
    assert pi1_star(g) == 1


@given(graphs())
def test_harmonic_index_against_degree_oracle(g):
    sums = nx_degree_sums(g)
    assert harmonic_index(g) == sum((Fraction(2, s) for s in sums), Fraction(0))
    assert harmonic_index_by_integral(harmonic_polynomial(g)) == harmonic_index(g)
    assert harmonic_polynomial(g)(1) == g.m


@given(graphs())
def test_zagreb_indices_against_degree_oracle(g):
    h = to_nx(g)
    z = zagreb_and_forgotten(g)
    assert z.m1 == sum(h.degree[u] + h.degree[v] for u, v in h.edges)
    assert z.m2 == sum(h.degree[u] * h.degree[v] for u, v in h.edges)
    assert z.f == sum(d**3 for _, d in h.degree)


@given(graphs(), graphs())
def test_disjoint_union_is_additive(a, b):
    u = disjoint_union(a, b)
    assert harmonic_polynomial(u) == harmonic_polynomial(a) + harmonic_polynomial(b)
    assert harmonic_index(u) == harmonic_index(a) + harmonic_index(b)


@given(graphs())
def test_profile_and_first_zagreb_polynomial(g):
    prof = coefficient_profile(g)
    assert prof.m == g.m
    assert prof.polynomial() == harmonic_polynomial(g)
    assert first_zagreb_polynomial(g) == harmonic_polynomial(g) * IntPolynomial([0, 1])


@given(graphs(), st.integers(-3, 4))
def test_chi_integral_alpha_is_exact(g, a):
    value = chi(g, a)
    assert isinstance(value, Fraction)
    assert value == sum((Fraction(s) ** a for s in nx_degree_sums(g)), Fraction(0))
    assert value == chi_by_edges(g, a)


@given(graphs(), st.sampled_from([0.5, -0.5, 1.5, -2.25]))
def test_chi_real_alpha(g, a):
    assert math.isclose(chi(g, a), chi_by_edges(g, a), rel_tol=1e-12, abs_tol=1e-300)


def test_chi_special_cases():
    g = star_graph(5)
    assert chi(g, 1) == zagreb_and_forgotten(g).m1
    assert 2 * chi(g, -1) == harmonic_index(g)
    assert chi(g, 0) == g.m


@given(graphs(max_n=7), st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False))
def test_complex_index_matches_edge_sum(g, z):
    direct = sum((cmath.exp(z * math.log(s)) for s in nx_degree_sums(g)), 0j)
    assert cmath.isclose(chi_complex(g, z), direct, rel_tol=1e-9, abs_tol=1e-9)


def test_t_mu_and_u_mu():
    g = path_graph(4)
    assert t_mu(g, lambda t: t) == 10
    assert u_mu(g, lambda t: t) == 36
    with pytest.raises(ValueError):
        t_mu(g, lambda t: t - 3)


@settings(max_examples=150)
@given(graphs(max_n=8))
def test_derivative_identities_hold(g):
    rels = derivative_identities(g, 5)
    assert all(r.holds for r in rels), [str(r) for r in rels if not r.holds]
    has_bounds = g.m and 0 not in g.degrees
    assert any("<= n" in r.name for r in rels) == bool(has_bounds)


def test_relation_operators():
    assert Relation("a", 1, 1).holds
    assert Relation("b", 1, 2, "<").holds
    assert not Relation("c", 3, 2, "<=").holds
    assert Relation("d", False, True, "=>").holds
    assert not Relation("e", True, False, "<=>").holds
    assert str(Relation("f", Fraction(1, 2), 1, "<=")) == "f: 1/2 <= 1"


def test_parse_alpha_and_exact_strings():
    assert parse_alpha("-2") == -2
    assert parse_alpha("1/2") == Fraction(1, 2)
    assert parse_alpha("4/2") == 2
    assert parse_alpha("0.5") == 0.5
    assert exact_str(Fraction(11, 6)) == "11/6"
    assert exact_str(Fraction(4, 2)) == "2"


def test_index_report_json_is_exact():
    rep = index_report(path_graph(4), [-1, Fraction(1, 2)]).to_json()
    assert rep["harmonic_index"] == "11/6"
    assert rep["polynomial"] == {"2": "2", "3": "1"}
    assert rep["chi"]["-1"] == "11/12"
    assert rep["chi"]["1/2"]["approx"] is True
    assert rep["structure"]["nonzero_count"] == 2


def test_index_report_text_for_k3():
    text = index_report(complete_graph(3)).to_text()
    assert "H(G,x) = 3x^3" in text
    assert "H = 3/2" in text


def test_index_report_for_edgeless_graph():
    rep = index_report(Graph(2)).to_json()
    assert rep["structure"]["degree"] == "undefined"
    assert rep["max_degree"] == "undefined"
