"""ab-perfectness checking and the structural recognizer.

A graph is ab-perfect for two invariants a <= b (in the universal chain
omega, chi, gamma, alpha, psi) when a(H) = b(H) on every induced
subgraph H.  The checker scans subsets in increasing size then
lexicographic order, so the first violation it reports is minimal: every
strictly smaller subset has already passed.

The recognizer decides the structural characterization of the
omega-psi-perfect graphs: a connected one is a complete graph or the
join of a complete graph with a disconnected graph whose components are
an empty part, two non-trivial complete graphs (plus isolated vertices),
or a single non-trivial part of the same recursive shape.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .forbidden import family_check
from .graphs import (
    CapacityError,
    Graph,
    complete_graph,
    connected_components,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    is_connected,
    join,
    universal_vertices,
)
from .solvers import (
    achromatic_number,
    chromatic_number,
    clique_number,
    grundy_number,
    pseudoachromatic_number,
)

AB_PERFECT_CAP = 10

INVARIANT_CHAIN = ("omega", "chi", "gamma", "alpha", "psi")

INVARIANT_SOLVERS = {
    "omega": clique_number,
    "chi": chromatic_number,
    "gamma": grundy_number,
    "alpha": achromatic_number,
    "psi": pseudoachromatic_number,
}


@dataclass(frozen=True)
class PerfectnessVerdict:
    """Result of one ab-perfect check, with a minimal counterexample if any."""

    pair: tuple[str, str]
    perfect: bool
    counterexample: tuple[frozenset[int], int, int] | None

    def to_dict(self) -> dict:
        out: dict = {"pair": list(self.pair), "perfect": self.perfect}
        if self.counterexample is None:
            out["counterexample"] = None
        else:
            vertices, a_val, b_val = self.counterexample
            out["counterexample"] = {
                "vertices": sorted(vertices),
                "a_value": a_val,
                "b_value": b_val,
            }
        return out


def is_ab_perfect(g: Graph, a: str, b: str) -> PerfectnessVerdict:
    """Check a(H) = b(H) on every induced subgraph of g.

    Subsets are scanned by size then lexicographically; the first
    violating subset is returned, and minimality is automatic.
    """
    if a not in INVARIANT_CHAIN or b not in INVARIANT_CHAIN:
        raise ValueError(f"invariants must be among {INVARIANT_CHAIN}")
    if INVARIANT_CHAIN.index(a) > INVARIANT_CHAIN.index(b):
        raise ValueError(f"{a!r} must precede or equal {b!r} in the invariant chain")
    if g.n > AB_PERFECT_CAP:
        raise CapacityError(
            f"is_ab_perfect capped at {AB_PERFECT_CAP} vertices, got {g.n}"
        )
    if a == b:
        return PerfectnessVerdict((a, b), True, None)
    solve_a = INVARIANT_SOLVERS[a]
    solve_b = INVARIANT_SOLVERS[b]
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            h = induced_subgraph(g, subset)
            a_val = solve_a(h)
            b_val = solve_b(h)
            if a_val != b_val:
                return PerfectnessVerdict(
                    (a, b), False, (frozenset(subset), a_val, b_val)
                )
    return PerfectnessVerdict((a, b), True, None)


# ---------------------------------------------------------------------------
# Structure trees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructureTree:
    """Recursive decomposition node.

    kinds: "complete" (K_m), "empty-part" (m isolated vertices), "union"
    (parts of a disconnected graph), "join" (K_m apex over one union
    part), "rejected" (with a reason).  A tree is accepted when no node
    anywhere in it is rejected.
    """

    kind: str
    m: int | None = None
    children: tuple["StructureTree", ...] = field(default=())
    reason: str | None = None

    @property
    def accepted(self) -> bool:
        if self.kind == "rejected":
            return False
        return all(child.accepted for child in self.children)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "m": self.m,
            "children": [child.to_dict() for child in self.children],
            "reason": self.reason,
        }


def _complete(m: int) -> StructureTree:
    return StructureTree("complete", m=m)


def _empty_part(m: int) -> StructureTree:
    return StructureTree("empty-part", m=m)


def _union(children: list[StructureTree]) -> StructureTree:
    return StructureTree("union", children=tuple(children))


def _join(m: int, part: StructureTree) -> StructureTree:
    return StructureTree("join", m=m, children=(part,))


def _rejected(reason: str) -> StructureTree:
    return StructureTree("rejected", reason=reason)


def _is_complete(g: Graph) -> bool:
    return g.edge_count() == g.n * (g.n - 1) // 2


def _classify_disconnected(g: Graph, comps: list[frozenset[int]]) -> StructureTree:
    """Sort a disconnected graph into one of the three allowed shapes."""
    nontrivial = [c for c in comps if len(c) >= 2]
    isolated = sum(1 for c in comps if len(c) == 1)
    if not nontrivial:
        return _union([_empty_part(isolated)])
    if len(nontrivial) == 1:
        sub = induced_subgraph(g, nontrivial[0])
        children = [_recognize_connected(sub)]
        if isolated:
            children.append(_empty_part(isolated))
        return _union(children)
    if len(nontrivial) == 2:
        parts = [induced_subgraph(g, c) for c in nontrivial]
        if not all(_is_complete(p) for p in parts):
            return _rejected("two non-trivial components must both be complete")
        children: list[StructureTree] = [_complete(p.n) for p in parts]
        if isolated:
            children.append(_empty_part(isolated))
        return _union(children)
    return _rejected(f"{len(nontrivial)} non-trivial components, at most two allowed")


def _recognize_connected(g: Graph) -> StructureTree:
    if _is_complete(g):
        return _complete(g.n)
    apex = universal_vertices(g)
    if not apex:
        return _rejected("connected, not complete, and no universal vertex")
    rest = sorted(set(range(g.n)) - apex)
    remainder = induced_subgraph(g, rest)
    comps = connected_components(remainder)
    if len(comps) == 1:
        return _rejected("remainder after peeling universal vertices is connected")
    return _join(len(apex), _classify_disconnected(remainder, comps))


def recognize_structure(g: Graph) -> StructureTree:
    """Decide the recursive shape of the omega-psi-perfect characterization.

    Rejection is a value (a "rejected" node at the failing position), not
    an error; polynomial, so no size cap beyond the graph capacity.
    """
    comps = connected_components(g)
    if len(comps) == 1:
        return _recognize_connected(g)
    return _classify_disconnected(g, comps)


def _decompose_connected(g: Graph) -> StructureTree:
    if _is_complete(g):
        return _complete(g.n)
    apex = universal_vertices(g)
    if not apex:
        return _rejected("connected, not complete, and no universal vertex")
    rest = sorted(set(range(g.n)) - apex)
    remainder = induced_subgraph(g, rest)
    comps = connected_components(remainder)
    if len(comps) == 1:
        return _rejected("remainder after peeling universal vertices is connected")
    children = [
        _decompose_connected(induced_subgraph(remainder, c)) for c in comps
    ]
    return _join(len(apex), _union(children))


def decompose_trivially_perfect(g: Graph) -> StructureTree:
    """Full quasi-threshold decomposition of a connected graph.

    Peels the maximal universal clique as the apex at every level and
    recurses into every component of the remainder; accepted exactly on
    the connected graphs with no induced 4-cycle or 4-path.
    """
    if not is_connected(g):
        raise ValueError("decompose_trivially_perfect requires a connected graph")
    return _decompose_connected(g)


def rebuild(tree: StructureTree) -> Graph:
    """Reconstruct a graph from an accepted structure tree."""
    if tree.kind == "complete":
        return complete_graph(tree.m)
    if tree.kind == "empty-part":
        return empty_graph(tree.m)
    if tree.kind == "union":
        out = None
        for child in tree.children:
            part = rebuild(child)
            out = part if out is None else disjoint_union(out, part)
        if out is None:
            raise ValueError("union node with no children")
        return out
    if tree.kind == "join":
        return join(complete_graph(tree.m), rebuild(tree.children[0]))
    raise ValueError(f"cannot rebuild from node kind {tree.kind!r}")


# ---------------------------------------------------------------------------
# Four-way equivalence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceRecord:
    """The four independently computed predicates of the main equivalence."""

    omega_psi_perfect: bool
    chi_psi_perfect: bool
    quartet_free: bool
    structure_accepted: bool

    @property
    def all_equal(self) -> bool:
        return (
            self.omega_psi_perfect
            == self.chi_psi_perfect
            == self.quartet_free
            == self.structure_accepted
        )

    def as_tuple(self) -> tuple[bool, bool, bool, bool]:
        return (
            self.omega_psi_perfect,
            self.chi_psi_perfect,
            self.quartet_free,
            self.structure_accepted,
        )

    def to_dict(self) -> dict:
        return {
            "omega_psi_perfect": self.omega_psi_perfect,
            "chi_psi_perfect": self.chi_psi_perfect,
            "quartet_free": self.quartet_free,
            "structure_accepted": self.structure_accepted,
            "all_equal": self.all_equal,
        }


def verify_equivalence(g: Graph) -> EquivalenceRecord:
    """Evaluate all four characterizations independently on one graph."""
    return EquivalenceRecord(
        omega_psi_perfect=is_ab_perfect(g, "omega", "psi").perfect,
        chi_psi_perfect=is_ab_perfect(g, "chi", "psi").perfect,
        quartet_free=family_check(g, "omega_psi_quartet").free,
        structure_accepted=recognize_structure(g).accepted,
    )
