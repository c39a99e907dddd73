"""Graph construction, combinators, and isomorphism machinery."""

import math
from itertools import combinations

import pytest

from abperfect import (
    CapacityError,
    Graph,
    canonical_form,
    complement,
    complete_bipartite,
    complete_graph,
    connected_components,
    cycle_graph,
    diameter,
    disjoint_union,
    empty_graph,
    enumerate_graphs,
    from_edge_list,
    induced_subgraph,
    is_isomorphic,
    join,
    k44_c7_graph,
    path_graph,
    universal_vertices,
)
from oracles import brute_min_code


def small_classes(n_max):
    for n in range(1, n_max + 1):
        yield from enumerate_graphs(n, "canonical")


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def test_from_edge_list_path():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert g == path_graph(4)
    assert g.edge_count() == 3


def test_from_edge_list_single_vertex():
    assert from_edge_list(1, []).n == 1


def test_duplicate_and_reversed_edges_collapse():
    g = from_edge_list(4, [(0, 1), (1, 0), (1, 2), (2, 3)])
    assert g == path_graph(4)


def test_constructor_rejections():
    with pytest.raises(CapacityError):
        from_edge_list(0, [])
    with pytest.raises(CapacityError):
        from_edge_list(33, [])
    with pytest.raises(ValueError):
        from_edge_list(3, [(1, 1)])
    with pytest.raises(ValueError):
        from_edge_list(3, [(0, 3)])


def test_graph_is_immutable():
    g = path_graph(3)
    with pytest.raises(AttributeError):
        g.n = 5


def test_adjacency_invariants_enforced_by_constructor():
    # Symmetry / irreflexivity are enforced in Graph.__init__ itself.
    with pytest.raises(ValueError):
        Graph(2, (1, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (1,))  # loop


# ---------------------------------------------------------------------------
# Combinators
# ---------------------------------------------------------------------------


def test_join_star_is_p3():
    assert is_isomorphic(join(complete_graph(1), empty_graph(2)), path_graph(3))


def test_join_of_completes_is_complete():
    assert join(complete_graph(2), complete_graph(3)) == complete_graph(5)


def test_join_apex_over_k2_plus_k1():
    g = join(complete_graph(1), disjoint_union(complete_graph(2), empty_graph(1)))
    assert g.n == 4 and g.edge_count() == 4
    # apex (vertex 0) adjacent to all, K2 pair adjacent, isolated only to apex
    assert sorted(g.edges()) == [(0, 1), (0, 2), (0, 3), (1, 2)]
    assert universal_vertices(g) == frozenset({0})


def test_join_counts():
    for g1 in small_classes(4):
        for g2 in small_classes(4):
            j = join(g1, g2)
            assert j.n == g1.n + g2.n
            assert j.edge_count() == g1.edge_count() + g2.edge_count() + g1.n * g2.n


def test_union_examples():
    g = disjoint_union(path_graph(3), complete_graph(2))
    assert g.n == 5 and g.edge_count() == 3
    assert len(connected_components(g)) == 2
    k2 = complete_graph(2)
    three = disjoint_union(disjoint_union(k2, k2), k2)
    assert three.n == 6 and three.edge_count() == 3
    assert len(connected_components(three)) == 3


def test_capacity_overflow():
    with pytest.raises(CapacityError):
        join(complete_graph(20), complete_graph(20))
    with pytest.raises(CapacityError):
        disjoint_union(empty_graph(20), empty_graph(20))


def test_complement_examples():
    assert complement(complete_graph(4)) == empty_graph(4)
    assert is_isomorphic(complement(cycle_graph(5)), cycle_graph(5))
    assert is_isomorphic(complement(path_graph(4)), path_graph(4))


def test_complement_involution():
    for g in small_classes(6):
        assert complement(complement(g)) == g


def test_join_is_complemented_union():
    # join(g1,g2) == co(co(g1) + co(g2)) for every pair with combined n <= 10
    pool = list(small_classes(7))
    for g1 in pool:
        for g2 in pool:
            if g1.n + g2.n > 10:
                continue
            lhs = join(g1, g2)
            rhs = complement(disjoint_union(complement(g1), complement(g2)))
            assert lhs == rhs


def test_induced_subgraph_examples():
    assert induced_subgraph(cycle_graph(4), {0, 1, 2}) == path_graph(3)
    g = k44_c7_graph()
    assert induced_subgraph(g, range(g.n)) == g
    assert induced_subgraph(complete_graph(5), {1, 3, 4}) == complete_graph(3)


def test_induced_subgraph_rejects_bad_sets():
    with pytest.raises(ValueError):
        induced_subgraph(path_graph(3), set())
    with pytest.raises(ValueError):
        induced_subgraph(path_graph(3), {0, 5})


def test_induced_components_are_induced_subgraphs_of_components():
    for g in small_classes(5):
        whole = connected_components(g)
        for size in range(1, g.n + 1):
            for subset in combinations(range(g.n), size):
                sub = induced_subgraph(g, subset)
                members = sorted(subset)
                for comp in connected_components(sub):
                    original = {members[i] for i in comp}
                    assert any(original <= c for c in whole)
                    assert induced_subgraph(g, original) == induced_subgraph(sub, comp)


# ---------------------------------------------------------------------------
# Component analysis, universal vertices, diameter
# ---------------------------------------------------------------------------


def test_components_ordering_and_singletons():
    g = disjoint_union(path_graph(3), complete_graph(2))
    comps = connected_components(g)
    assert comps == [frozenset({0, 1, 2}), frozenset({3, 4})]
    assert connected_components(complete_graph(1)) == [frozenset({0})]


def test_universal_vertices_examples():
    assert universal_vertices(cycle_graph(4)) == frozenset()
    assert universal_vertices(complete_graph(4)) == frozenset(range(4))


def test_diameter_examples():
    assert diameter(path_graph(4)) == 3
    assert diameter(empty_graph(2)) == math.inf
    assert diameter(complete_graph(1)) == 0


def test_diameter_at_most_2_on_connected_c4_p4_free():
    from abperfect import PATTERNS, contains_induced, is_connected

    for g in small_classes(7):
        if not is_connected(g):
            continue
        if contains_induced(g, PATTERNS["C4"]) is not None:
            continue
        if contains_induced(g, PATTERNS["P4"]) is not None:
            continue
        assert diameter(g) <= 2


# ---------------------------------------------------------------------------
# Named graphs
# ---------------------------------------------------------------------------


def test_witness_graph_shape():
    g = k44_c7_graph()
    assert g.n == 13
    assert g.edge_count() == 22
    # triangle-free by construction
    for triple in combinations(range(g.n), 3):
        assert not all(g.has_edge(u, v) for u, v in combinations(triple, 2))


def test_cycle_and_bipartite():
    assert cycle_graph(7).edge_count() == 7
    g = complete_bipartite(4, 4)
    assert g.edge_count() == 16
    for triple in combinations(range(8), 3):
        assert not all(g.has_edge(u, v) for u, v in combinations(triple, 2))


def test_named_rejections():
    with pytest.raises(ValueError):
        cycle_graph(2)
    with pytest.raises(ValueError):
        complete_bipartite(0, 3)


# ---------------------------------------------------------------------------
# Isomorphism and canonical form
# ---------------------------------------------------------------------------


def test_isomorphism_examples():
    p4 = path_graph(4)
    assert is_isomorphic(p4, complement(p4))
    c4_variant = from_edge_list(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert is_isomorphic(cycle_graph(4), c4_variant)
    assert not is_isomorphic(p4, cycle_graph(4))


def test_canonical_form_matches_brute_min_code_equality():
    # On all labeled graphs with 4 vertices: canonical forms agree exactly
    # when the unrestricted minimum permutation codes agree.
    labeled = list(enumerate_graphs(4, "labeled"))
    brute = [brute_min_code(g) for g in labeled]
    canon = [canonical_form(g) for g in labeled]
    for i in range(len(labeled)):
        for j in range(i + 1, len(labeled)):
            assert (brute[i] == brute[j]) == (canon[i] == canon[j])


def test_canonical_form_invariant_under_relabeling():
    from itertools import permutations

    for g in small_classes(5):
        base = canonical_form(g)
        for perm in list(permutations(range(g.n)))[:6]:
            relabeled = from_edge_list(
                g.n, [(perm[u], perm[v]) for u, v in g.edges()]
            )
            assert canonical_form(relabeled) == base


def test_canonical_distinct_across_classes():
    forms = [canonical_form(g) for g in small_classes(6)]
    assert len(forms) == len(set(forms))


def test_capacity_caps_on_isomorphism_machinery():
    with pytest.raises(CapacityError):
        canonical_form(empty_graph(9))
    with pytest.raises(CapacityError):
        is_isomorphic(empty_graph(11), empty_graph(11))
