import random

import numpy as np
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from specert.certify import CertStatus, certify, check_hypotheses
from specert.closure import closure_parameter_for, k_closure
from specert.families import Family, circulant_regular, gen_EP, membership, validate_witness
from specert.formats import edge_mask_graph, from_edge_list, from_graph6, to_edge_list, to_graph6
from specert.graph import (Graph, complement, complete_bipartite, is_connected, is_regular,
                           is_semiregular_bipartite, min_degree, union)
from specert.harness import closure_params
from specert.oracles import (GraphOracles, deficiency, edge_connectivity, is_hamiltonian,
                             is_s_connected, is_s_edge_connected, is_s_edge_hamiltonian,
                             is_s_hamiltonian, min_path_cover, vertex_connectivity)
from specert.params import Theorem, TheoremParams, valid_params
from specert.spectral import min_edge_geometric_degree, spectral_radius

from witness_check import check_family, check_negative


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return edge_mask_graph(n, mask)


@st.composite
def graph_and_non_edge(draw):
    g = draw(graphs(min_n=2))
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    assume(missing)
    return g, draw(st.sampled_from(missing))


# -- graph core -------------------------------------------------------------------------

@given(graphs())
def test_complement_involution_and_degrees(g):
    h = complement(g)
    assert complement(h) == g
    assert all(g.degree(v) + h.degree(v) == g.n - 1 for v in g.vertices)


@given(graphs())
def test_serialisations_round_trip(g):
    assert from_graph6(to_graph6(g)) == g
    assert from_edge_list(to_edge_list(g)) == g


@given(st.integers(1, 9), st.integers(1, 9))
def test_complete_bipartite_is_semiregular(a, b):
    w = is_semiregular_bipartite(complete_bipartite(a, b))
    assert (w.deg_x, w.deg_y) == (b, a)
    assert len(w.side_x) == a and len(w.side_y) == b


@given(st.integers(2, 12), st.data())
def test_regular_bipartite_agrees(n, data):
    half = n // 2
    d = data.draw(st.integers(1, half))
    # Circulant bipartite: i ~ half + (i + j) % half for j < d.
    edges = [(i, half + (i + j) % half) for i in range(half) for j in range(d)]
    g = Graph.from_edges(2 * half, edges)
    w = is_semiregular_bipartite(g)
    assert is_regular(g) == d and w is not None and w.deg_x == w.deg_y == d


# -- spectral ----------------------------------------------------------------------------

@settings(max_examples=60)
@given(graphs(min_n=2, max_n=8))
def test_geometric_degree_lower_bound(g):
    assume(g.num_edges and is_connected(g))
    mu = spectral_radius(g).value
    gap = mu - min_edge_geometric_degree(g)
    assert gap >= -1e-7
    structured = is_regular(g) is not None or is_semiregular_bipartite(g) is not None
    assert structured == (abs(gap) <= 1e-7)


@settings(max_examples=60)
@given(graph_and_non_edge())
def test_spectral_monotone_under_edge_addition(case):
    g, (u, v) = case
    assert spectral_radius(g.add_edge(u, v)).value >= spectral_radius(g).value - 1e-9


@settings(max_examples=60)
@given(graphs(min_n=1, max_n=6), graphs(min_n=1, max_n=6))
def test_union_takes_larger_radius(g1, g2):
    want = max(spectral_radius(g1).value, spectral_radius(g2).value)
    assert abs(spectral_radius(union(g1, g2)).value - want) <= 2e-10


@settings(max_examples=40)
@given(graphs(min_n=1, max_n=10))
def test_spectral_matches_eigensolver(g):
    want = np.linalg.eigvalsh(g.adjacency_matrix())[-1] if g.num_edges else 0.0
    assert abs(spectral_radius(g).value - want) <= 1e-9


# -- closure -----------------------------------------------------------------------------

@given(graphs(max_n=10), st.integers(0, 20))
def test_closure_idempotent(g, k):
    closed = k_closure(g, k).closed
    assert k_closure(closed, k).added_edges == []


@given(graphs(max_n=10), st.integers(0, 20), st.integers(0, 2**32))
def test_closure_order_independent(g, k, seed):
    assert k_closure(g, k, random.Random(seed)).closed == k_closure(g, k).closed


@given(graphs(max_n=10), st.integers(0, 20), st.integers(0, 5))
def test_closure_monotone_in_k(g, k, extra):
    small = set(k_closure(g, k).closed.edges())
    large = set(k_closure(g, k + extra).closed.edges())
    assert large <= small


@settings(max_examples=60)
@given(graphs(min_n=3, max_n=7))
def test_closure_preserves_properties(g):
    # Every property but s-edge-Hamiltonicity is monotone under adding
    # edges, so the two-way equivalence holds; for edge-Hamiltonicity only the
    # closed-to-original direction survives (see the acceptance suite).
    for prop, param in closure_params(g.n, 2):
        h = k_closure(g, closure_parameter_for(prop, g.n, param)).closed
        a, b = GraphOracles(g).holds(prop, param), GraphOracles(h).holds(prop, param)
        if prop is Theorem.S_EDGE_HAM:
            assert a or not b
        else:
            assert a == b


# -- oracles -----------------------------------------------------------------------------

@given(graphs(min_n=2, max_n=10))
def test_menger_chain(g):
    assert vertex_connectivity(g) <= edge_connectivity(g) <= min_degree(g)


@given(graphs(max_n=12))
def test_deficiency_parity(g):
    assert deficiency(g) % 2 == g.n % 2


@settings(max_examples=60)
@given(graphs(min_n=2, max_n=7), st.integers(1, 3))
def test_oracle_monotone_in_s(g, s):
    if is_s_connected(g, s).holds:
        assert is_s_connected(g, s - 1).holds
    if is_s_edge_connected(g, s).holds:
        assert is_s_edge_connected(g, s - 1).holds
    if is_s_hamiltonian(g, s).holds:
        assert is_s_hamiltonian(g, s - 1).holds


@settings(max_examples=60)
@given(graphs(min_n=2, max_n=7), st.integers(0, 2))
def test_implication_chains(g, s):
    if is_s_connected(g, s).holds:
        assert is_s_edge_connected(g, s).holds
    if is_s_hamiltonian(g, s).holds:
        assert is_s_edge_hamiltonian(g, s).holds


@given(graphs(min_n=1, max_n=9))
def test_hamiltonian_is_traceable(g):
    if is_hamiltonian(g).holds:
        assert min_path_cover(g) == 1


@settings(max_examples=60)
@given(graphs(min_n=2, max_n=7))
def test_negative_witnesses_revalidate(g):
    o = GraphOracles(g)
    for prop, param in closure_params(g.n, 2):
        v = o.verdict(prop, param)
        if not v.holds:
            assert check_negative(g, prop, param, v.witness)


# -- families and certifier ---------------------------------------------------------------

@settings(max_examples=60)
@given(st.integers(5, 11), st.data())
def test_ep_round_trip(n, data):
    k = data.draw(st.integers(1, (n - 1) // 2))
    r = data.draw(st.integers(0, k))
    assume((n - k + r) * r % 2 == 0)
    g = gen_EP(n, k, r, core=circulant_regular(n - k + r, r))
    assert min_degree(g) >= k
    p = TheoremParams(Theorem.S_CONN, k, s=1)
    w = membership(g, Family.EP, p)
    assert w is not None and validate_witness(g, w, p) and check_family(g, w, k, p.s)


@settings(max_examples=80)
@given(graphs(min_n=3, max_n=8), st.data())
def test_certify_deterministic_and_honest(g, data):
    ps = valid_params(g.n)
    assume(ps)
    p = data.draw(st.sampled_from(ps))
    out = certify(g, p)
    assert out == certify(g, p)
    if not check_hypotheses(g, p).passed:
        assert out.status is CertStatus.HYPOTHESIS_UNMET
    if out.status is CertStatus.EXCEPTIONAL:
        assert validate_witness(g, out.witness, p) and check_family(g, out.witness, p.k, p.s)
    if out.status is CertStatus.CERTIFIED:
        assert GraphOracles(g).holds(p.theorem, p.s_or_beta)
