#!/usr/bin/env python3
"""Tour of the five coloring invariants on small named graphs.

For every graph G the chain omega <= chi <= Gamma <= alpha <= psi holds:
the clique number bounds the chromatic number, which bounds the Grundy
number (worst-case greedy), which bounds the achromatic number (largest
proper coloring with every color pair on an edge), which bounds the
pseudoachromatic number (drop properness).  This script shows graphs
where the chain collapses, partially separates, and -- on a single
13-vertex example -- separates completely into (2,3,4,5,6).
"""

from abperfect import (
    Coloring,
    complete_graph,
    cycle_graph,
    is_complete_coloring,
    is_grundy,
    is_proper,
    k44_c7_graph,
    path_graph,
    profile,
    pseudoachromatic_number,
)

print("=" * 64)
print("Profiles (omega, chi, gamma, alpha, psi)")
print("=" * 64)

for name, g in [
    ("K5 (complete)", complete_graph(5)),
    ("P4 (path)", path_graph(4)),
    ("C4 (4-cycle)", cycle_graph(4)),
    ("C5 (odd hole)", cycle_graph(5)),
    ("C11", cycle_graph(11)),
]:
    print(f"{name:16s} -> {profile(g).as_tuple()}")

print()
print("On a complete graph every invariant equals n: any two vertices are")
print("adjacent, so colorings are partitions into singletons.")
print()
print("P4 already separates chi from Gamma: coloring the two endpoints")
print("first forces a third color on an interior vertex.")

p4 = path_graph(4)
witness = Coloring((1, 2, 3, 1))
print(
    f"P4 coloring {witness.serialize()!r}: proper={is_proper(p4, witness)}, "
    f"complete={is_complete_coloring(p4, witness)}, grundy={is_grundy(p4, witness)}"
)

print()
print("=" * 64)
print("A graph where all five invariants differ")
print("=" * 64)
g = k44_c7_graph()
print(f"K4,4 glued to C7 along one edge: n={g.n}, m={g.edge_count()}")
print(f"profile = {profile(g).as_tuple()}   (expected (2, 3, 4, 5, 6))")

psi, coloring = pseudoachromatic_number(g, witness=True)
print(f"a complete {psi}-coloring (not proper): {coloring.serialize()}")
