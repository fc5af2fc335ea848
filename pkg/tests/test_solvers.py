import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mdimlab import (
    Certificate,
    EnumerationOverflowError,
    GraphError,
    NotABasisError,
    SearchBudgetExceededError,
    build_graph,
    complete_graph,
    cycle_graph,
    edge_element,
    forced_vertices_mdim,
    gn_graph,
    is_edge_resolving,
    is_mixed_resolving,
    is_resolving,
    leaf_count,
    path_graph,
    phi_of_basis,
    phi_of_graph,
    phi_set,
    random_tree,
    signature,
    solve_dimension,
    star_graph,
    subdivision,
    total,
    vertex_element,
)

from conftest import connected_graphs, oracle_min_witnesses


def test_signature_examples(g2):
    p3 = path_graph(3)
    assert signature(p3, vertex_element(0), [0]) == (0,)
    assert signature(p3, edge_element(0), [2]) == (1,)
    z1 = 2
    assert signature(g2, vertex_element(z1), [0, 1]) == (1, 1)


def test_signature_follows_witness_order():
    p4 = path_graph(4)
    assert signature(p4, vertex_element(0), [3, 1]) == (3, 1)


def test_path_resolved_by_one_leaf():
    for n in (2, 3, 5, 8):
        assert is_resolving(path_graph(n), [0])
        assert is_resolving(path_graph(n), [n - 1])


def test_cycle_not_resolved_by_one_vertex():
    assert not is_resolving(cycle_graph(4), [0])


def test_known_mixed_basis_of_subdivided_two_hub(g2):
    sg = subdivision(g2)
    splits = {g2.edges[j]: sg.subdivision_vertex(j) for j in range(g2.m)}
    basis = [splits[(0, 2)], splits[(0, 3)], splits[(1, 2)]]  # x-z1, x-z2, y-z1
    assert is_mixed_resolving(sg.graph, basis)


def test_empty_witness_rejected():
    with pytest.raises(GraphError):
        is_resolving(path_graph(3), [])


def test_forced_vertices_examples():
    assert forced_vertices_mdim(star_graph(4)) == (1, 2, 3)
    for n in (2, 3, 5):
        assert forced_vertices_mdim(complete_graph(n)) == tuple(range(n))
    assert forced_vertices_mdim(path_graph(4)) == (0, 3)


ORACLE_CASES = [
    path_graph(4),
    path_graph(6),
    cycle_graph(4),
    cycle_graph(5),
    cycle_graph(7),
    star_graph(5),
    complete_graph(4),
    gn_graph(2)[0],
    gn_graph(3)[0],
    build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]),
    build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5)]),
    random_tree(7, seed=3),
    random_tree(8, seed=11),
]


@pytest.mark.parametrize("kind", ["dim", "edim", "mdim"])
@pytest.mark.parametrize("g", ORACLE_CASES, ids=lambda g: f"n{g.n}m{g.m}")
def test_solver_matches_exhaustive_oracle(g, kind):
    value, witnesses = oracle_min_witnesses(g.n, g.edges, kind)
    cert = solve_dimension(g, kind)
    assert cert.value == value
    assert cert.vertices == witnesses[0]  # lexicographically smallest minimum witness


def test_certificates_are_deterministic():
    g = gn_graph(3)[0]
    assert solve_dimension(g, "mdim") == solve_dimension(g, "mdim")


@pytest.mark.parametrize("g", ORACLE_CASES, ids=lambda g: f"n{g.n}m{g.m}")
def test_mixed_dimension_dominates_both_others(g):
    dim = solve_dimension(g, "dim").value
    edim = solve_dimension(g, "edim").value
    assert max(dim, edim) <= solve_dimension(g, "mdim").value


def test_mixed_dimension_of_two_hub_pair(g2):
    assert solve_dimension(g2, "mdim").value == 4
    assert solve_dimension(subdivision(g2).graph, "mdim").value == 3


def test_tree_mixed_dimension_is_leaf_count():
    for seed in (1, 2, 3, 4):
        t = random_tree(9, seed)
        assert solve_dimension(t, "mdim").value == leaf_count(t)


def test_total_graph_of_big_star_dim():
    tg = total(star_graph(6)).graph  # five leaves
    assert solve_dimension(tg, "dim").value == 4


def test_forced_vertices_are_unremovable():
    for g in (star_graph(4), gn_graph(2)[0], path_graph(5)):
        cert = solve_dimension(g, "mdim")
        assert set(cert.forced) <= set(cert.vertices)
        for v in cert.forced:
            rest = sorted(set(cert.vertices) - {v})
            assert not rest or not is_mixed_resolving(g, rest)


def test_budget_exhaustion_raises():
    with pytest.raises(SearchBudgetExceededError):
        solve_dimension(cycle_graph(8), "mdim", budget=3)


@settings(max_examples=60)
@given(connected_graphs(max_n=7), st.randoms(use_true_random=False))
def test_verifier_monotonicity(g, rnd):
    base = sorted(rnd.sample(range(g.n), rnd.randint(1, g.n)))
    extra = sorted(set(base) | {rnd.randrange(g.n)})
    for verify in (is_resolving, is_edge_resolving, is_mixed_resolving):
        if verify(g, base):
            assert verify(g, extra)


def test_phi_set_applies_the_definition(g2):
    sg = subdivision(g2)
    assert phi_set(sg, [0]) == (0,)
    j = g2.edge_index(1, 3)
    assert phi_set(sg, [sg.subdivision_vertex(j)]) == (1, 3)
    assert phi_set(sg, [0, sg.subdivision_vertex(j)]) == (0, 1, 3)


def test_phi_of_basis_guards_resolving(g2):
    sg = subdivision(g2)
    with pytest.raises(NotABasisError):
        phi_of_basis(sg, [sg.subdivision_vertex(0)])  # a lone split never resolves
    basis = [sg.subdivision_vertex(g2.edge_index(0, 2)),
             sg.subdivision_vertex(g2.edge_index(0, 3)),
             sg.subdivision_vertex(g2.edge_index(1, 2))]
    assert phi_of_basis(sg, basis) == (0, 1, 2, 3)


def test_phi_of_basis_single_original_leaf():
    sg = subdivision(path_graph(2))
    assert phi_of_basis(sg, [0]) == (0,)


def test_phi_of_single_edge_graph():
    result = phi_of_graph(path_graph(2))
    # S(K2) is a 3-path; exactly its two end vertices resolve it
    assert result.phi_value == 1
    assert result.bases_enumerated == 2
    assert result.witness_basis == (0,)
    assert result.witness_phi_set == (0,)


def test_phi_of_three_path():
    result = phi_of_graph(path_graph(3))
    assert result.phi_value == 1
    assert result.bases_enumerated == 2


def test_phi_chain_on_two_hub(g2):
    result = phi_of_graph(g2)
    dim = solve_dimension(g2, "dim").value
    edim = solve_dimension(g2, "edim").value
    mdim_s = solve_dimension(subdivision(g2).graph, "mdim").value
    assert result.phi_value >= max(dim, edim)
    assert result.phi_value <= 2 * mdim_s
    assert is_resolving(subdivision(g2).graph, result.witness_basis)
    assert len(result.witness_phi_set) == result.phi_value


def test_phi_enumeration_cap():
    with pytest.raises(EnumerationOverflowError):
        phi_of_graph(cycle_graph(6), cap=1)


def test_phi_propagates_inner_search_budget():
    with pytest.raises(SearchBudgetExceededError):
        phi_of_graph(cycle_graph(8), budget=2)


@settings(max_examples=25, deadline=None)
@given(connected_graphs(max_n=6))
def test_phi_witness_consistency(g):
    result = phi_of_graph(g)
    sg = subdivision(g)
    assert is_resolving(sg.graph, result.witness_basis)
    assert phi_set(sg, result.witness_basis) == result.witness_phi_set
    assert result.bases_enumerated >= 1


def test_certificate_shape():
    cert = solve_dimension(path_graph(5), "edim")
    assert isinstance(cert, Certificate)
    assert cert.kind == "edim"
    assert cert.forced == ()
    assert cert.value == len(cert.vertices)
