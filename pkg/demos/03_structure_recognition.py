#!/usr/bin/env python3
"""Structural recognition: apex peeling and quasi-threshold decomposition.

Connected graphs in the omega-psi-perfect class are either complete or a
complete apex joined onto a disconnected remainder of a restricted
shape.  The recognizer peels all universal vertices at once (they form
the apex clique) and classifies the remainder; the full quasi-threshold
decomposition recurses into every component instead and accepts exactly
the connected (C4,P4)-free graphs.
"""

import json

from abperfect import (
    complete_graph,
    cycle_graph,
    decompose_trivially_perfect,
    disjoint_union,
    empty_graph,
    is_isomorphic,
    join,
    path_graph,
    rebuild,
    recognize_structure,
)


def show(tree, depth=0):
    label = tree.kind
    if tree.m is not None:
        label += f" m={tree.m}"
    if tree.reason:
        label += f"  [{tree.reason}]"
    print("  " * depth + label)
    for child in tree.children:
        show(child, depth + 1)


print("=" * 64)
print("Recognition")
print("=" * 64)

apex_graph = join(complete_graph(1), disjoint_union(complete_graph(2), empty_graph(1)))
print("K1 + (K2 u K1):")
show(recognize_structure(apex_graph))

print()
print("P4 (no universal vertex):")
show(recognize_structure(path_graph(4)))

print()
print("K3 u K3 u 2K1 (two complete components plus isolated vertices):")
show(recognize_structure(disjoint_union(
    disjoint_union(complete_graph(3), complete_graph(3)), empty_graph(2)
)))

print()
print("=" * 64)
print("Decomposition and rebuild")
print("=" * 64)

nested = join(
    complete_graph(2),
    disjoint_union(apex_graph, disjoint_union(complete_graph(3), empty_graph(1))),
)
tree = decompose_trivially_perfect(nested)
show(tree)
print(f"rebuild is isomorphic to the input: {is_isomorphic(rebuild(tree), nested)}")

print()
print("C4 is rejected (nothing to peel):")
show(decompose_trivially_perfect(cycle_graph(4)))

print()
print("Trees serialize to JSON for downstream tooling:")
print(json.dumps(recognize_structure(apex_graph).to_dict()))
