"""Harmonic polynomials of graphs and the degree-based indices they determine."""

from .graph import (
    ACYCLIC,
    DISCONNECTED,
    UNDEFINED,
    Biregular,
    Graph,
    GraphError,
    Neither,
    Regular,
    build_graph,
    connected_components,
    degree_summary,
    diameter,
    disjoint_union,
    dominant_vertices,
    girth,
    has_alternated_degree,
    is_coherent,
    is_isomorphic,
    is_triangle_free,
    line_graph,
    pendant_path_count,
    regularity_class,
)
from .polynomial import (
    IntPolynomial,
    Parity,
    derivative,
    evaluate,
    parity,
    structure,
    vieta_q,
)
from .indices import (
    CoefficientProfile,
    InvariantError,
    chi,
    chi_complex,
    coefficient_profile,
    derivative_identities,
    harmonic_index,
    harmonic_polynomial,
    index_report,
    pi1_star,
    t_mu,
    u_mu,
    zagreb_and_forgotten,
)
from .families import (
    FamilySpec,
    closed_form_polynomial,
    g_r_union,
    generate,
    parse_family,
    t_r_tree,
)
from .formats import (
    parse_edge_list,
    parse_graph6,
    parse_sparse6,
    write_graph6,
    write_sparse6,
)
from .verifier import enumerate_graphs, mine_collisions, run_checks, verify_corpus

__version__ = "0.1.0"
